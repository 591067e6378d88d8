import os
from pathlib import Path

class Config:
    SEED = int(os.getenv("HEXABLOCH_SEED", "20031109"))
    TOLERANCE = float(os.getenv("HEXABLOCH_TOL", "1e-12"))

    # Geometric-product output below this magnitude is dropped
    PRUNE_THRESHOLD = float(os.getenv("HEXABLOCH_PRUNE", "1e-15"))

    # Scaling-and-squaring exponential
    EXP_SERIES_TOL = float(os.getenv("HEXABLOCH_EXP_TOL", "1e-14"))
    EXP_SCALE_THRESHOLD = float(os.getenv("HEXABLOCH_EXP_SCALE", "0.5"))
    EXP_MAX_TERMS = int(os.getenv("HEXABLOCH_EXP_MAX_TERMS", "60"))

    # 'e' or '2'
    ENTROPY_LOG_BASE = os.getenv("HEXABLOCH_LOG_BASE", "e")

    LOG_LEVEL = os.getenv("HEXABLOCH_LOG_LEVEL", "WARNING")

    TABLE_DATA_DIR = Path(
        os.getenv("HEXABLOCH_TABLE_DATA", Path(__file__).parent.parent / "table_data")
    )
