import os
import json
from dotenv import load_dotenv

load_dotenv(override=True)


def _env_int(key: str, default: int) -> int:
    value = os.getenv(key)
    return int(value) if value not in (None, "") else default


def _env_bool(key: str, default: bool) -> bool:
    value = os.getenv(key)
    if value in (None, ""):
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


DEFAULT_FUEL = _env_int("WORKBENCH_FUEL", 50)
DEFAULT_SEED = _env_int("WORKBENCH_SEED", 0)
DEFAULT_SIZE = _env_int("WORKBENCH_SIZE", 6)
DEFAULT_DEPTH = _env_int("WORKBENCH_DEPTH", 4)
DEFAULT_COUNT = _env_int("WORKBENCH_COUNT", 200)
DEFAULT_PROC_SIZE = _env_int("WORKBENCH_PROC_SIZE", 8)
# out-left orientation only when set; both orientations otherwise
DEFAULT_STRICT = _env_bool("WORKBENCH_STRICT", False)


def pp(*objs):
    for obj in objs:
        print(json.dumps(obj, indent=4, ensure_ascii=False, default=str))


def write_output(text: str, out: str | None = None) -> None:
    """Print, or write to `out` when a file name is given."""
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)
