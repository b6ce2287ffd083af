#!/usr/bin/env python
from __future__ import print_function

# To use a consistent encoding
from codecs import open
from os import path

# import version from file
with open("pyfillings/version.py") as f:
    exec(f.read())

try:
    from setuptools import setup
except ImportError:
    print("Setuptools unavailable. Falling back to distutils.")
    from distutils.core import setup

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, "README.rst"), encoding="utf-8") as f:
    long_description = f.read()


setup_kwargs = dict(
    name="pyfillings",
    version=__version__,
    description="Enumeration of the minimal symplectic fillings of quotient surface singularities.",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    author="pyfillings developers",
    license="MIT",
    # You can just specify the packages manually here if your project is
    # simple. Or you can use find_packages().
    packages=[
        "pyfillings",
        "pyfillings.fillings",
    ],
    # Necessary to keep the catalog and the golden lists
    package_data={"pyfillings": ["data/catalog.json", "data/golden.json"]},
    install_requires=[
        "numpy",
        "networkx>=2.0",
    ],
    entry_points={"console_scripts": ["pyfillings = pyfillings.cli:main"]},
    zip_safe=False,
    tests_require=["pytest"],
    classifiers=[
        # How mature is this project? Common values are
        #   3 - Alpha
        #   4 - Beta
        #   5 - Production/Stable
        "Development Status :: 3 - Alpha",
        # Indicate who your project is intended for
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        # Pick your license as you wish (should match "license" above)
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
    # What does your project relate to?
    keywords="symplectic fillings quotient singularities continued fractions blow-ups",
)

setup(**setup_kwargs)
