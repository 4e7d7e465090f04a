from __future__ import annotations

from qsym.run import run

if __name__ == "__main__":
    run()
