"""
GALLAIKIT Explain

报告与轨迹的文本渲染
"""
