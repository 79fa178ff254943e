"""A short lattice path whose first three signature levels all vanish.

The bundled axis-parallel path takes eight alternating steps, has lattice
length 14 (strictly below 2^(3+1) = 16), and still zeroes out every
signature tensor up to order 3 -- its first nonzero data appears at
order 4.  The same check is exposed on the command line as
`sigtensor verify-vanishing`.
"""

import json
from importlib.resources import files

from sigtensor import path_from_json, signature_series
from sigtensor.words import all_words

data = json.loads(files("sigtensor.data").joinpath("lyons_xu.json").read_text())
path = path_from_json(data)
print("steps:", [(str(path.lengths[i]) if d == 1 else "0",
                  str(path.lengths[i]) if d == 2 else "0")
                 for i, d in enumerate(path.dirs)])
print("lattice length:", path.lattice_length())

series = signature_series(path, 4)
for k in range(1, 5):
    print(f"level {k} identically zero: {series.levels[k].is_zero()}")

level4 = series.levels[4]
nonzero = {(''.join(map(str, w))): str(level4[w]) for w in all_words(2, 4) if level4[w] != 0}
print("first nonzero level (4) entries:", nonzero)
