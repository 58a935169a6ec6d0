"""
GALLAIKIT Ledger

运行账本
"""
