#!/usr/bin/env python
from setuptools import find_packages, setup

from graphdecomp import get_version


def get_install_requires():
    """parse requirements.txt, ignore links, exclude comments"""
    requirements = []
    for line in open("requirements.txt").readlines():
        # skip to next iteration if comment or empty line
        if (
            line.startswith("#")
            or line == ""
            or line.startswith("http")
            or line.startswith("git")
        ):
            continue
        # add line to requirements
        requirements.append(line)
    return requirements


setup(
    name="graphdecomp",
    version=get_version(),
    license="GPL3",
    description="Vertex decompositions of digraphs and bowtie-free extremal graphs",
    long_description=open("README.rst").read(),
    platforms=["Platform Independent"],
    keywords=["django", "graphs", "digraphs", "decomposition", "turan", "matching"],
    packages=find_packages(exclude=["tests", "docs"]),
    include_package_data=True,
    zip_safe=False,
    python_requires=">=3.10",
    install_requires=get_install_requires(),
    entry_points={"console_scripts": ["graphdecomp = graphdecomp.cli.main:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
        "Framework :: Django",
        "Programming Language :: Python :: 3",
    ],
)
