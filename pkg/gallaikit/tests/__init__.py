"""
GALLAIKIT 测试
"""
