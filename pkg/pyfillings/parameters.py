# This file contains the package wide parameters and the static catalog data
# Copyright (C) 2024  pyfillings developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#
# You should have received a copy of the MIT License along with this program. If
# not, see <https://opensource.org/licenses/MIT>.

"""
This file defines the package wide parameters:
    * Search caps used by the filling enumerator
    * The seed used by randomized checks
    * The static catalog of the tetrahedral, octahedral and icosahedral
      resolution arms and of the cusp transformation step lists
    * The location of the golden descriptor lists
"""
import io
import json
import os

# We implement the constants as a dictionary so that they can
# be modified at runtime.
# The class Constants gives an interface to update the value of
# constants or add new ones.
_constants = {}
_constants_default = {
    "max_blowups": 64,  # hard cap on the blow-ups of a single realization
    "max_solutions": 100000,  # hard cap on the descriptors of one enumeration
    "time_budget": 600.0,  # seconds allowed for one enumeration
    "blowup_slack": 4,  # added to the provable blow-up bound of a target
    "seed": 0,  # default seed of the randomized checks
}

# environment variables that override the defaults at import time
_environment = {
    "PYFILLINGS_MAX_BLOWUPS": ("max_blowups", int),
    "PYFILLINGS_MAX_SOLUTIONS": ("max_solutions", int),
    "PYFILLINGS_TIME_BUDGET": ("time_budget", float),
    "PYFILLINGS_SEED": ("seed", int),
}


class Constants:
    """
    A class to provide easy access package wide to user settable constants.
    """

    def set(self, name, val):
        # add constant to dictionnary
        _constants[name] = val

    def get(self, name):

        try:
            v = _constants[name]
        except KeyError:
            try:
                v = _constants_default[name]
            except KeyError:
                raise NameError(name + ": no such constant")

        return v


# the instanciation of the class
constants = Constants()


def _read_environment(environ=None):
    """Apply the ``PYFILLINGS_*`` environment overrides to the constants"""

    if environ is None:
        environ = os.environ

    for var, (name, cast) in _environment.items():
        if var not in environ:
            continue
        try:
            constants.set(name, cast(environ[var]))
        except ValueError:
            raise ValueError(
                "Environment variable {} should be of type {}, got {!r}".format(
                    var, cast.__name__, environ[var]
                )
            )


_read_environment()


r"""
Catalog Data
------------

The resolution graphs of the tetrahedral, octahedral and icosahedral
singularities are star shaped: a central curve of weight ``-b`` with three
arms. The arms only depend on the residue of ``m`` modulo the period of the
family (6, 12 or 30). Each arm is stored as the list of the magnitudes of its
weights, read from the central curve outward. The arms are ordered so that
the first one is the single ``-2`` curve, the second one is the arm that
decides the type (two ``-2`` curves or a single ``-3`` curve) and the third
one is the branch used by the normalization of the compactifying divisor.
"""
# the file containing the catalog
_catalog_fn = os.path.join(os.path.dirname(__file__), "data/catalog.json")

# the file containing the expected descriptor lists
golden_fn = os.path.join(os.path.dirname(__file__), "data/golden.json")

with io.open(_catalog_fn, "r", encoding="utf8") as f:
    catalog_data = json.load(f)

    catalog_version = catalog_data["version"]

    family_periods = {
        key: p["period"] for key, p in catalog_data["families"].items()
    }
    family_orders = {
        key: tuple(p["orders"]) for key, p in catalog_data["families"].items()
    }
    family_arms = {
        key: {int(r): [list(arm) for arm in arms] for r, arms in p["arms"].items()}
        for key, p in catalog_data["families"].items()
    }

    transform_steps = catalog_data["transforms"]
