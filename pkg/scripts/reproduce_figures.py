#!/usr/bin/env python3
"""Emit the three figure data sets as CSV into out/ (or a chosen directory)."""

import argparse
import pathlib

from eurnoise.cli import main as cli_main


def run(out_dir: pathlib.Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for preset in ("fig2", "fig3", "smfig-b"):
        dest = out_dir / f"{preset.replace('-', '_')}.csv"
        code = cli_main([preset, "--out", str(dest)])
        if code != 0:
            raise SystemExit(code)
        print(f"wrote {dest}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("out"))
    run(parser.parse_args().out_dir)
