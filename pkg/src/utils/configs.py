import json
from pathlib import Path

DEFAULT_CONFIG = {
    "min_workers": 1,
    "max_workers": 8,
    "max_retries": 1,
    "log_file": "logs.log",
    "catalog_dir": "catalog",
    "output_dir": "data_output/reports",
    "guards": {
        "max_group_order": 1000000,
        "max_subgroups": 100000,
        "sample_triples": 10000,
        "seed": 20240229
    },
    "envelope": {"2": 128, "3": 2187, "5": 15625, "7": 343},
    "oracle_limits": {
        "hall_max_order": {"2": 128, "3": 729},
        "subset_pair_max_order": {"2": 64, "3": 243},
        "literal_at_index_max_order": {"2": 128, "3": 243}
    }
}


def load_config(path="config.json"):
    # missing keys fall back to the defaults so partial configs keep working
    config = json.loads(json.dumps(DEFAULT_CONFIG))
    config_path = Path(path)
    if config_path.exists():
        with open(config_path, "r") as f:
            user = json.load(f)
        for key, value in user.items():
            if isinstance(value, dict) and isinstance(config.get(key), dict):
                config[key].update(value)
            else:
                config[key] = value
    return config


def get_guards(path="config.json"):
    return load_config(path)["guards"]


def get_envelope(path="config.json"):
    """Per-prime maximal group order, keyed by int prime."""
    envelope = load_config(path)["envelope"]
    return {int(p): int(order) for p, order in envelope.items()}


def get_oracle_limits(path="config.json"):
    limits = load_config(path)["oracle_limits"]
    return {name: {int(p): int(order) for p, order in bounds.items()}
            for name, bounds in limits.items()}


def get_worker_bounds(path="config.json"):
    config = load_config(path)
    return config["min_workers"], config["max_workers"]


def get_catalog_dir(path="config.json"):
    return Path(load_config(path)["catalog_dir"])


def get_output_dir(path="config.json"):
    return Path(load_config(path)["output_dir"])
