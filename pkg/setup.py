import re
from pathlib import Path

from setuptools import find_packages, setup

version_raw = (Path(__file__).parent / "leibnizpy" / "version.py").read_text()
version = re.compile(r'__version__\s=\s"(\d+\.\d+.\d)').search(version_raw).group(1)

setup(
    name="leibnizpy",
    version=version,
    author="vertyco",
    author_email="alex.c.goble@gmail.com",
    long_description=Path("README.md").read_text(encoding="utf-8"),
    long_description_content_type="text/markdown",
    description="Exact arithmetic toolkit for cyclic Leibniz algebras, their endomorphisms and automorphism groups",
    packages=find_packages(exclude=["tests"]),
    keywords=[
        "leibniz",
        "algebra",
        "cyclic",
        "automorphism",
        "endomorphism",
        "finite field",
        "exact arithmetic",
        "polynomial",
        "quotient ring",
        "computer algebra",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: MIT License",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Framework :: Pydantic :: 2",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
        "Typing :: Typed",
    ],
    install_requires=["pydantic>=2", "python-dotenv", "sympy>=1.13"],
    entry_points={"console_scripts": ["leibniz=leibnizpy.cli:main"]},
    python_requires=">=3.8",
)
