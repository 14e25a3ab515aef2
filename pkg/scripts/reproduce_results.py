#!/usr/bin/env python3
"""
Reproduction helper.
Runs the rate benchmarks for every homopolymer limit and, when images are
given, a quality sweep for both VLC kinds. Results land under out/.
"""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
MAX_HL_VALUES = (2, 3, 4)


def check_python_version():
    """Check if Python version is compatible"""
    if sys.version_info < (3, 11):
        print("❌ Python 3.11 or higher is required")
        print(f"Current version: {sys.version}")
        return False
    print(f"✅ Python version: {sys.version.split()[0]}")
    return True


def check_dependencies():
    """Check if required packages are installed"""
    missing = []
    for package in ("pydantic", "pydantic_settings", "numpy", "scipy", "PIL", "orjson"):
        try:
            __import__(package)
        except ImportError:
            missing.append(package)
    if missing:
        print(f"❌ Missing packages: {', '.join(missing)}")
        print("Install them with: pip install -r requirements.txt")
        return False
    print("✅ Dependencies installed")
    return True


def run(*args):
    command = [sys.executable, "-m", "app.main", *args]
    print(f"▶ {' '.join(command[2:])}")
    result = subprocess.run(command, cwd=ROOT)
    if result.returncode != 0:
        print(f"❌ Command failed with exit code {result.returncode}")
        sys.exit(result.returncode)


def main():
    print("🧬 dnacoder reproduction run")
    print("=" * 40)
    if not (check_python_version() and check_dependencies()):
        sys.exit(1)

    for max_hl in MAX_HL_VALUES:
        run("bench", "--ac-fixture", "--exact", "--max-hl", str(max_hl), "--out-dir", f"out/ac/hl{max_hl}")
    for max_hl in MAX_HL_VALUES:
        run(
            "--config",
            "conf/bench.toml",
            "bench",
            "--max-hl",
            str(max_hl),
            "--out-dir",
            f"out/gaussian/hl{max_hl}",
        )

    images = sys.argv[1:]
    if images:
        run("img-sweep", *images, "--qualities", "10:90:10", "--output", "out/images/sweep.csv")
    else:
        print("ℹ️  No images given; skipping the image sweep")

    print("✅ Done. Reports are under out/")


if __name__ == "__main__":
    main()
