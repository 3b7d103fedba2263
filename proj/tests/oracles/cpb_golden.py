# Copyright 2026 The sqcircuit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates tests/data/cpb_spectrum_golden.csv with numpy.

Charge basis n = -N..N, H = Ec (n - ng)^2 - (Ej/2)(|n><n+1| + h.c.).
"""

import pathlib
import sys

import numpy as np

EC, EJ, CUTOFF, LEVELS, POINTS = 5.0, 1.0, 10, 5, 101


def levels(ng):
    n = np.arange(-CUTOFF, CUTOFF + 1)
    h = np.diag(EC * (n - ng) ** 2) - 0.5 * EJ * (np.eye(n.size, k=1) + np.eye(n.size, k=-1))
    return np.linalg.eigvalsh(h)[:LEVELS]


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else
                       pathlib.Path(__file__).parents[1] / "data" / "cpb_spectrum_golden.csv")
    header = pathlib.Path(__file__).read_text().split("\n\n", 1)[0]
    rows = [header, "ng," + ",".join(f"E{k}" for k in range(LEVELS))]
    for ng in np.linspace(0.0, 1.0, POINTS):
        rows.append(",".join(f"{v:.15g}" for v in [ng, *levels(ng)]))
    out.write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
