from setuptools import setup, find_packages

setup(
    name='romanus',
    version='1.0.0-alpha.1',
    description='Exact Chebyshev polynomials, nested square roots and the degree 45 equation of Romanus',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    author='romanus contributors',
    license='MIT',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=[
        'setuptools>=42',  # Specify version if needed
    ],
    extras_require={
        'cli': [            # For running standalone
        ],
        'dev': [            # For development
            'pytest',       # For testing
            'flake8',       # For linting
            'sphinx',       # For documentation
            'mpmath',       # Independent reference values in tests
        ],
    },
    entry_points={
        'console_scripts': [
            'romanus=romanus.__main__:main',
        ],
    },
    python_requires='>=3.8',
)
