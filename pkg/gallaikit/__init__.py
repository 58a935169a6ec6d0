"""
GALLAIKIT

最长路 / 最大 M-细分横截集（transversal）精确计算工具包。

- core-graph: 图、多重图模式与路径/圈代数
- subdivision-engine: 最大 M-细分的穷举
- menger: 不相交路径连接器与最小分隔集
- transversal: 精确最小命中集、τ(M,G) 与 Gallai 数
- proof-procedures: 证明中的构造过程（带证书）
- constructions: 图目录与生成器
"""

__version__ = "0.1.0"
