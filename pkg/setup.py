import pathlib

from setuptools import find_packages, setup

here = pathlib.Path(__file__).parent.resolve()

requirements = [
    "argparse-formatter>=1.4",
    "colorama>=0.4.4",
    "drawsvg~=2.3",
    "fusion-engine-client==1.24.0rc1",
    "networkx>=3.0",
    "numpy>=1.22",
]

dev_requirements = [
    "autopep8~=2.3.1",
    "isort~=5.13.2",
    "pytest",
]

all_requirements = requirements + dev_requirements

setup(
    name='additive-circuit-tools',
    version='v0.1.0',
    packages=find_packages(where='.', include=['addcirc', 'addcirc.*']),
    install_requires=list(requirements),
    extras_require={
        'all': [all_requirements],
        'dev': [all_requirements],
    },
    entry_points={
        'console_scripts': [
            'addcirc = addcirc.main:main',
        ],
    },
)
