#!/usr/bin/env python3
# Copyright 2026 The shviz Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates core/data/tdesign_*.txt from the Hardin-Sloane tables.

The published coordinates of the larger designs carry only ~6 significant
digits, which is not enough for a 1e-10 orthonormality check. Each table is
polished with Gauss-Newton on the moment equations sum_q Y_n^m(s_q) = 0.

Usage: polish_tdesigns.py t_designs_1_21.mat core/data
(the .mat file ships with the spaudiopy wheel under data/Grids/).
"""

import sys

import numpy as np
import scipy.io
from scipy.spatial.transform import Rotation
from scipy.special import sph_harm_y

DEGREES = [2, 4, 6, 8, 10, 12, 14, 16, 18, 21]


def real_sh(t, th, ph):
  cols = []
  for n in range(1, t + 1):
    for m in range(-n, n + 1):
      y = sph_harm_y(n, abs(m), th, ph)
      if m > 0:
        cols.append(np.sqrt(2) * y.real)
      elif m < 0:
        cols.append(np.sqrt(2) * y.imag)
      else:
        cols.append(y.real)
  return np.array(cols)


def polish(v, t, h=1e-6):
  th = np.arccos(np.clip(v[:, 2], -1, 1))
  ph = np.arctan2(v[:, 1], v[:, 0])
  q = len(th)
  for _ in range(30):
    r = real_sh(t, th, ph).sum(axis=1)
    if np.abs(r).max() < 1e-15:
      break
    dth = (real_sh(t, th + h, ph) - real_sh(t, th - h, ph)) / (2 * h)
    dph = (real_sh(t, th, ph + h) - real_sh(t, th, ph - h)) / (2 * h)
    step = np.linalg.lstsq(np.hstack([dth, dph]), -r, rcond=1e-10)[0]
    th, ph = th + step[:q], ph + step[q:]
  w = np.stack([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)],
               axis=1)
  return w, np.abs(real_sh(t, th, ph).sum(axis=1)).max()


def main(mat_path, out_dir):
  tables = scipy.io.loadmat(mat_path)['t_designs'][0]
  # A generic frame keeps every point away from the theta/phi poles.
  rot = Rotation.from_euler('xyz', [0.3, 0.2, 0.1]).as_matrix()
  for t in DEGREES:
    v = np.array(tables[t - 1], dtype=float)
    v /= np.linalg.norm(v, axis=1)[:, None]
    w, residual = polish(v @ rot.T, t)
    w = w @ rot
    print(f't={t} Q={len(w)} residual={residual:.3g} '
          f'max move={np.abs(w - v).max():.3g}')
    with open(f'{out_dir}/tdesign_{t}.txt', 'w') as f:
      f.write(f'# Spherical {t}-design, {len(w)} points, Cartesian unit vectors (x y z).\n')
      f.write('# Source: R. H. Hardin and N. J. A. Sloane, spherical designs library,\n')
      f.write("#   http://neilsloane.com/sphdesigns/ (McLaren's Improved Snub Cube and\n")
      f.write('#   Other New Spherical Designs in Three Dimensions, DCG 15 (1996) 429-441).\n')
      f.write('# Coordinates polished by Gauss-Newton on the moment equations\n')
      f.write(f'#   sum_q Y_n^m(s_q) = 0, 1 <= n <= {t}, to a residual below 1e-13.\n')
      for p in w:
        f.write('%.17g %.17g %.17g\n' % tuple(p))


if __name__ == '__main__':
  main(sys.argv[1], sys.argv[2])
