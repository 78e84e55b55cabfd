from setuptools import find_packages, setup

with open('requirements.txt') as f:
    requirements = f.read().strip().split('\n')

setup(
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    python_requires=">=3.8",
    install_requires=requirements,
    include_package_data=True,
    package_data={"racah_natural": ["*.toml", "suites/*.toml", "suites/*/*.toml"]},
    entry_points={"console_scripts": ["racah-natural=racah_natural.cli:main"]},
)
