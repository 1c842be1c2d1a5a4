from setuptools import setup, find_packages

setup(
    name="lowreg",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},

    description="low-regularity Fourier integrators, Strang baseline and convergence benchmarks for the cubic NLS on the torus",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    author="",
    author_email="",
    python_requires=">=3.10",
    install_requires=[],
    entry_points={"console_scripts": ["lowreg = lowreg.cli:main"]},
)
