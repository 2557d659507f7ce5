import os
import logging
from dotenv import load_dotenv

load_dotenv()

APP_NAME = "rr"
APP_VERSION = "1.0.0"

DEFAULT_MAX_L = int(os.getenv("RR_MAX_L", 12)) # Brute-force colon cap for ideals without a closed form
REDUCTION_SEARCH_CAP = int(os.getenv("RR_REDUCTION_SEARCH_CAP", 64)) # Used only when no bound is known (slanted ideals)

STAIRCASE_MAX_CELLS = int(os.getenv("RR_STAIRCASE_MAX_CELLS", 60))
ENUMERATE_MAX_DEGREE = int(os.getenv("RR_ENUMERATE_MAX_DEGREE", 22)) # 2^(d-1) ideals, keep it practical
CHECK_POWERS_LMAX = int(os.getenv("RR_CHECK_POWERS_LMAX", 4))

LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()


def validate_config():
    positive_vars = {
        "RR_MAX_L": DEFAULT_MAX_L,
        "RR_REDUCTION_SEARCH_CAP": REDUCTION_SEARCH_CAP,
        "RR_STAIRCASE_MAX_CELLS": STAIRCASE_MAX_CELLS,
        "RR_ENUMERATE_MAX_DEGREE": ENUMERATE_MAX_DEGREE,
        "RR_CHECK_POWERS_LMAX": CHECK_POWERS_LMAX,
    }
    bad_vars = [f"{key} (is {value})" for key, value in positive_vars.items() if value < 1]

    if ENUMERATE_MAX_DEGREE < 2:
        bad_vars.append(f"RR_ENUMERATE_MAX_DEGREE (must be at least 2, is {ENUMERATE_MAX_DEGREE})")
    if not isinstance(logging.getLevelName(LOG_LEVEL), int):
        bad_vars.append(f"LOG_LEVEL (unknown level '{LOG_LEVEL}')")

    if bad_vars:
        raise ValueError(
            f"Invalid configuration for: {', '.join(bad_vars)}. "
            "Please update your environment or .env file."
        )


if __name__ == "__main__":
    print("Configuration Loaded:")
    print(f"  RR_MAX_L: {DEFAULT_MAX_L}")
    print(f"  RR_REDUCTION_SEARCH_CAP: {REDUCTION_SEARCH_CAP}")
    print(f"  RR_STAIRCASE_MAX_CELLS: {STAIRCASE_MAX_CELLS}")
    print(f"  RR_ENUMERATE_MAX_DEGREE: {ENUMERATE_MAX_DEGREE}")
    print(f"  RR_CHECK_POWERS_LMAX: {CHECK_POWERS_LMAX}")
    print(f"  LOG_LEVEL: {LOG_LEVEL}")

    try:
        validate_config()
        print("\nConfig validation passed.")
    except ValueError as e:
        print(f"\nConfig validation FAILED: {e}")
