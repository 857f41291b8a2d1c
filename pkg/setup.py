from setuptools import setup


setup(name='hidproj',
      version="0.1",
      packages=['hidproj', 'hidproj.linalg', 'hidproj.factorizations',
                'hidproj.crypto', 'experiments'],
      install_requires=['numpy', 'scipy', 'sacred', 'pandas', 'tqdm'])
