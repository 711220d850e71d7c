import subprocess
import os
import sys

from setuptools import find_packages, setup

if len(sys.argv) > 1:
    # Invoked by a build backend / pip: act as the package manifest
    setup(
        name="hexanet",
        version="1.0.0",
        packages=find_packages(include=["hexanet", "hexanet.*"]),
        python_requires=">=3.9",
        install_requires=[
            "pydantic",
            "pydantic-settings",
            "python-dotenv",
            "numpy",
            "pandas",
            "networkx",
            "matplotlib",
        ],
    )
else:
    # `python setup.py`: install dependencies and prepare the output directory

    print("="*50)
    print("Hexanet - Setup")
    print("="*50)

    # Core dependencies to install
    dependencies = [
        "pydantic",
        "pydantic-settings",
        "python-dotenv",
        "numpy",
        "pandas",
        "networkx",
        "matplotlib",
        "pytest",
        "hypothesis",
    ]

    print("\nInstalling dependencies...")
    for dep in dependencies:
        print(f"  Installing {dep}...")
        try:
            subprocess.check_call([sys.executable, "-m", "pip", "install", dep, "--quiet"])
        except subprocess.CalledProcessError:
            print(f"  Warning: Could not install {dep}, may already be installed")

    print("\nDependencies installed!")

    # Rendered pictures go here by convention
    os.makedirs("out", exist_ok=True)
    print("\nOutput directory created!")

    print("\n" + "="*50)
    print("Setup Complete!")
    print("="*50)

    print("\nTry it:")
    print("1. python -m hexanet tilings --n 4 --count-only")
    print("2. python -m hexanet gen --n 3 | python -m hexanet to-network | python -m hexanet reconstruct")
    print("3. python -m pytest")
