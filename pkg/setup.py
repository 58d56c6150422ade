"""Setup file for installing dependencies for chainspec."""

from setuptools import setup

setup(name='chainspec',
      version='0.1.0',
      description='Largest eigenvalues of bipartite chain graphs, omega '
                  'bounds and exhaustive verification of extremal graphs',
      license='GNU General Public License v3.0',
      python_requires='>=3.8',
      install_requires=[
          'networkx>=2.5',
          'numpy>=1.20.0',
          'pandas>=1.2.3',
          'scipy>=1.6.0',
          'tqdm>=4.31.1',
      ],
      packages=['chainspec'],
      entry_points={
          'console_scripts': ['chainspec=chainspec.cli:main'],
      },
     )
