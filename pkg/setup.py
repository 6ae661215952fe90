# Copyright © 2024 laxcomma contributors.

import datetime
import os
from pathlib import Path
from subprocess import CalledProcessError, run

from setuptools import find_namespace_packages, setup


def get_version(version):
    if "PYPI_RELEASE" not in os.environ:
        today = datetime.date.today()
        version = f"{version}.dev{today.year}{today.month}{today.day}"

        if "DEV_RELEASE" not in os.environ:
            try:
                git_hash = (
                    run(
                        "git rev-parse --short HEAD".split(),
                        capture_output=True,
                        check=True,
                    )
                    .stdout.strip()
                    .decode()
                )
            except (CalledProcessError, FileNotFoundError):
                git_hash = None
            if git_hash:
                version = f"{version}+{git_hash}"

    return version


# Read the content of README.md
with open(Path(__file__).parent / "README.md", encoding="utf-8") as f:
    long_description = f.read()

if __name__ == "__main__":
    packages = find_namespace_packages(where="python", exclude=["tests", "tests.*"])
    package_dir = {"": "python"}

    setup(
        name="laxcomma",
        version=get_version("0.1.0"),
        author="laxcomma contributors",
        description="Finite comma objects, lax slices, change of base and Kan extensions, checked exhaustively.",
        long_description=long_description,
        long_description_content_type="text/markdown",
        packages=packages,
        package_dir=package_dir,
        install_requires=["numpy"],
        extras_require={
            "testing": ["pytest"],
            "dev": ["pre-commit", "black"],
        },
        entry_points={"console_scripts": ["laxcomma = laxcomma.cli:main"]},
        zip_safe=False,
        python_requires=">=3.8",
    )
