"""
GALLAIKIT Utils

工具函数
"""
