import json
import logging
from pathlib import Path


def _log_file():
    # the logger is created at import time, before any command parses flags
    config_path = Path("config.json")
    if config_path.exists():
        try:
            with open(config_path, "r") as f:
                return json.load(f).get("log_file", "logs.log")
        except (json.JSONDecodeError, OSError):
            pass
    return "logs.log"


def log():
    logger = logging.getLogger("pgroups")
    if not logger.handlers:
        file = logging.FileHandler(_log_file(), mode='w')
        logger.setLevel(logging.INFO)
        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        file.setFormatter(formatter)
        logger.addHandler(file)
    return logger
log = log()
