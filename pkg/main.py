#!/usr/bin/env python3
"""
GALLAIKIT - 源码目录启动脚本

不安装包时直接运行 CLI：

    python main.py gallai petersen --pattern C1
"""

import sys
from pathlib import Path

from dotenv import load_dotenv

# 加载环境变量
load_dotenv()

# 添加项目路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from gallaikit.ui.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
