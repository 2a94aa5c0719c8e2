try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup


setup(
    name="steklov",
    version="0.1.0",
    description="steklov computes Steklov spectra of graphs with boundary",
    long_description="""steklov is a package for Python used by researchers and students to \
compute and investigate Steklov (Dirichlet-to-Neumann) eigenvalues of weighted finite graphs \
with boundary. At the core of steklov are the discrete operators: Laplacians, normal \
derivatives, harmonic extensions and the Dirichlet-to-Neumann map, with or without vanishing \
Dirichlet data on an interior set.

On top of that are constructors for stars, combs and homogeneous tree balls together with \
their closed-form spectra, verifiers that check eigenvalue monotonicity, rigidity and \
estimates on concrete graphs, a randomised counterexample search and a command line tool \
reading and writing graphs as JSON.
""",
    author="the steklov developers",
    packages=[
        "steklov",
        "steklov.core",
        "steklov.containers",
        "steklov.theorems",
        "steklov.extra",
    ],
    install_requires=["six", "numpy", "scipy", "networkx"],
    extras_require={
        "test": ["hypothesis"],
    },
    entry_points={
        "console_scripts": ["steklov=steklov.extra.cli:main"],
    },
    license="GPLv3",
    classifiers=[
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Education",
        "License :: OSI Approved :: GNU General Public License (GPL)",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Education",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
)
