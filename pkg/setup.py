#!/usr/bin/env python

import sys, os
from setuptools import setup, find_packages
from setuptools.command.develop import develop
from setuptools.command.install import install
from setuptools.command.build_py import build_py
from codecs import open
from os import path

# Get access to alstop config and versioning info
here = path.abspath(path.dirname(__file__))
sys.path.insert(1, os.path.join(here, 'src/alstop/config'))
import config

buildpath = path.join(here, 'BUILD')
if os.path.exists(buildpath):
    with open(buildpath, encoding='utf-8') as f:
        buildtag = '.' + f.read().strip()
else:
    buildtag = ''

with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()

with open(path.join(here, 'py3requirements.txt'), encoding='utf-8') as f:
    requirements = [line.strip() for line in f if line.strip() != '' and not line.startswith('#')]


def write_distdata(target_dir, root):
    with open(os.path.join(target_dir, 'alstop', 'distdata.py'), 'w') as f:
        f.write('version = \"' + config.version + '\"\n')
        f.write('version_date = \"' + config.version_date + '\"\n')
        f.write('copyright_note = \"' + config.copyright_note + '\"\n')
        f.write('root = \"' + (config.alstop_root if root is None else root) + '\"\n')


class AlstopDevelopCommand(develop):
    description = "Development installation of alstop"

    def run(self):
        # Versioning keeps following git in a development checkout; no distdata is written
        develop.run(self)


class AlstopInstallCommand(install):
    description = "Installation of alstop"
    user_options = install.user_options + [
        ('alstoproot=', None, 'Specify the directory to use as alstop root.'),
    ]

    def initialize_options(self):
        install.initialize_options(self)
        self.alstoproot = None

    def run(self):
        install.run(self)
        write_distdata(self.install_lib, self.alstoproot)


class AlstopBuildCommand(build_py):
    description = "Build alstop"

    def run(self):
        build_py.run(self)
        if not self.dry_run:
            write_distdata(self.build_lib, None)


setup(
    cmdclass={
        'develop': AlstopDevelopCommand,
        'install': AlstopInstallCommand,
        'build_py': AlstopBuildCommand,
    },

    name='alstop',
    version=config.version + buildtag,
    description='The active-learning stopping toolkit: run active learning experiments, evaluate stopping criteria, and rank them by deployment cost',
    long_description=long_description,
    long_description_content_type='text/x-rst',
    author='The alstop developers',

    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
        'License :: OSI Approved :: GNU Affero General Public License v3 or later (AGPLv3+)',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],

    keywords='active-learning stopping-criteria machine-learning evaluation cost-model benchmark',

    packages=find_packages('src', exclude=['contrib', 'docs', 'tests']),
    package_dir={'': 'src'},
    python_requires='>=3.8',
    install_requires=requirements,

    extras_require={
        'test': ['pytest', 'hypothesis'],
    },

    package_data={
        'alstop': ['alstop.cfg'],
    },
    include_package_data=True,

    entry_points={
        'console_scripts': [
            'alstop=alstop.__main__:main',
        ],
    },
)
