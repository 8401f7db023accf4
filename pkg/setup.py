from setuptools import setup

setup(
    name='coexpy',
    version='0.1.0',
    description='Exact computation and simulation for positive l-degree Turan problems on k-uniform hypergraphs',
    packages=['coexpy', 'coexpy.hypergraph', 'coexpy.hypergraphon', 'coexpy.search'],
    install_requires=['numpy>=1.25', 'scipy>=1.0'],
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['coexpy=coexpy.cli:main']},
    keywords=['Hypergraph', 'Turan problem', 'positive codegree', 'hypergraphon',
              'Python', 'Numpy', 'Scipy'],
    license='MIT',
    classifiers=['License :: OSI Approved :: MIT License',
                 'Programming Language :: Python :: 3.9'],
)
