"""内核配置（通过 .env 覆盖）。"""

from __future__ import annotations

import os
from pathlib import Path

from dotenv import load_dotenv

# 优先加载项目根目录下的 .env
BASE_DIR = Path(__file__).resolve().parents[1]
load_dotenv(BASE_DIR / ".env")

APP_NAME = os.getenv("APP_NAME", "HyperKernel")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").strip().upper() or "INFO"

# 符号结构的默认窗口与级数比较深度（每次输出都会回显）
DEFAULT_WINDOW = os.getenv("DEFAULT_WINDOW", "-8..8")
DEFAULT_DEPTH = int(os.getenv("DEFAULT_DEPTH", "10"))
DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))

# ℚ 窗口取 1/d 网格；ℤ^k 窗口中尾部坐标的取值半径
WINDOW_DENOMINATOR = max(1, int(os.getenv("WINDOW_DENOMINATOR", "2")))
LEX_WINDOW_RADIUS = max(0, int(os.getenv("LEX_WINDOW_RADIUS", "1")))

# 0 表示按 CPU 数量；1 表示在当前进程内串行
ENUM_WORKERS = max(0, int(os.getenv("ENUM_WORKERS", "0")))

SEMIRING_CAP = int(os.getenv("SEMIRING_CAP", "4096"))
SERIES_SEARCH_LIMIT = int(os.getenv("SERIES_SEARCH_LIMIT", "256"))
MAX_VIOLATIONS = int(os.getenv("MAX_VIOLATIONS", "64"))

# 元素集合用单个机器字表示
CARRIER_CAPACITY = 64
# 符号结构窗口表的载体上限（只在内部物化时使用）
WINDOW_CAPACITY = max(CARRIER_CAPACITY, int(os.getenv("WINDOW_CAPACITY", "256")))
ORDERING_CAPACITY = 16
HYPERGROUP_ENUM_LIMIT = 6
HYPERFIELD_ENUM_LIMIT = 7
HYPERRING_ENUM_LIMIT = 5
RATIONAL_BOUND = 2**63 - 1

TEMPLATES_DIR = BASE_DIR / "app" / "templates"
