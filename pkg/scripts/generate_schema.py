#!/usr/bin/env python3
"""Regenerate the shipped JSON schema for the analyze output.

Run from the repository root after changing the response models:

    python scripts/generate_schema.py
"""

import json
import pathlib

from graphstate.service.schemas import AnalyzeResponse

TARGET = pathlib.Path(__file__).resolve().parent.parent / "src" / "graphstate" / "schemas" / "analysis_output.schema.json"


def main() -> None:
    schema = AnalyzeResponse.model_json_schema()
    TARGET.write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {TARGET}")


if __name__ == "__main__":
    main()
