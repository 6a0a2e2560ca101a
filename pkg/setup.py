#!/usr/bin/env python3
import os
import setuptools


HERE = os.path.dirname(os.path.abspath(__file__))


def read_lines(filename):
    with open(os.path.join(HERE, filename)) as f:
        lines = (line.split('#', 1)[0].strip() for line in f)
        return [line for line in lines if line]


with open(os.path.join(HERE, 'README.md')) as f:
    long_description = f.read()

version, = read_lines('version.txt')
if version.count('.') != 2:
    raise ValueError("version.txt must hold MAJOR.MINOR.PATCH")

# development status follows the minor version until 1.0
major, minor, _ = map(int, version.split('.'))
if major >= 1:
    status = 'Development Status :: 5 - Production/Stable'
elif minor >= 3:
    status = 'Development Status :: 4 - Beta'
else:
    status = 'Development Status :: 3 - Alpha'


setuptools.setup(
    name='qmse',
    version=version,
    description="Quantum molecular structure encoding for similarity and "
                "variational learning",
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='MIT',
    python_requires='>=3.10',
    install_requires=read_lines('requirements.txt'),
    extras_require={'dev': read_lines('requirements.dev.txt')},
    classifiers=[
        status,
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Chemistry',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    packages=setuptools.find_packages(exclude=['scripts', 'scripts.*']),
    package_data={'qmse.cli': ['data/*.csv']},
    entry_points={'console_scripts': ['qmse=qmse.cli.main:main']},
    zip_safe=False,
)
