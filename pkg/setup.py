#! /usr/bin/env python
# -*- coding: utf-8 -*-
import re
from setuptools import setup, find_packages
from codecs import open
from os import path

basedir = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(basedir, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()


# locate our version number
def read_version_py(file_name):
    try:
        version_string_line = open(file_name, "rt").read()
    except EnvironmentError:
        return None
    else:
        version_regex = r"^version_str = ['\"]([^'\"]*)['\"]"
        mo = re.search(version_regex, version_string_line, re.M)
        if mo:
            return mo.group(1)


VERSION_PY_FILENAME = 'e2p/_version.py'
version = read_version_py(VERSION_PY_FILENAME)

setup(
    name='e2p',
    version=version,
    description='Formal minimal and intuitionistic logic proofs from uniform evidence terms.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='MIT',
    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    keywords='proof realizability intuitionistic minimal logic sequent calculus',

    # included packages
    packages=find_packages(exclude=['contrib', 'docs', 'Tests', 'Tests.*']),
    python_requires=">=3.7",
    # required libs
    install_requires=[
        'pyyaml>=5.1',
        'six>=1.12.0',
        'jinja2>=2.10.1',
        'lark>=1.1.0',
        'mock>=3.0.5'
    ],

    # additional files
    package_data={
        'e2p': ['settings.yml'],
    },

    # entry point script
    entry_points={
        'console_scripts': [
            'e2p=e2p:main',
        ],
    },
)
