# coding: utf-8
import os
import re

from setuptools import setup


def get_version(package):
    """
    Version déclarée par `__version__` dans le `__init__.py` du paquet
    """
    with open(os.path.join(package, "__init__.py")) as init_py:
        return re.search("__version__ = ['\"]([^'\"]+)['\"]", init_py.read()).group(1)


def get_packages(package):
    """
    Paquet racine et sous-paquets
    """
    return [
        dirpath
        for dirpath, dirnames, filenames in os.walk(package)
        if os.path.exists(os.path.join(dirpath, "__init__.py"))
    ]


with open("README.md", encoding="utf-8") as readme:
    long_description = readme.read()


setup(
    name="ungas-framework",
    version=get_version("ungas"),
    description="Association schemes of finite groups and entanglement of one-excitation Heisenberg dynamics",
    long_description=long_description,
    long_description_content_type="text/markdown",
    package_dir={"ungas": "ungas"},
    packages=get_packages("ungas"),
    test_suite="ungas.runtests.run_tests",
    entry_points={"console_scripts": ["ungas = ungas.cli:main"]},
    zip_safe=False,
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Framework :: Django",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    python_requires=">=3.10",
    install_requires=[
        "Django>=4.2",
        "djangorestframework>=3.14",
        "numpy>=1.24",
        "scipy>=1.10",
        "PyYAML>=6",
    ],
)
