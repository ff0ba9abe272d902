# Copyright (C) 2026 The dualpinn developers
#
# This file is part of dualpinn.
#
# dualpinn is free software: you can redistribute it and/or modify it under
# the terms of the GNU General Public License as published by the Free Software
# Foundation, either version 3 of the License, or (at your option) any later
# version.
#
# dualpinn is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR
# A PARTICULAR PURPOSE.  See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with
# dualpinn.  If not, see <http://www.gnu.org/licenses/>.

"Dual-network physics-informed neural networks with augmented Lagrangian boundaries"

import codecs as _codecs
import os.path as _os_path

from setuptools import setup

from dualpinn import __version__, __url__


_name = 'dualpinn'
_this_dir = _os_path.dirname(__file__)


setup(
    name=_name,
    version=__version__,
    maintainer='The dualpinn developers',
    url=__url__,
    license='GNU General Public License v3 or later (GPLv3+)',
    platforms=['all'],
    description=__doc__,
    long_description=_codecs.open(
        _os_path.join(_this_dir, 'README'), 'r', encoding='utf-8').read(),
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
        ],
    packages=[
        _name,
        '{}.bench'.format(_name),
        '{}.component'.format(_name),
        '{}.dtype'.format(_name),
        '{}.problem'.format(_name),
        '{}.property'.format(_name),
        '{}.trainer'.format(_name),
        ],
    package_data={_name: ['presets/*.cfg']},
    install_requires=[
        'numpy',
        'scipy',
        ],
    extras_require={'test': ['pytest']},
    entry_points={
        'console_scripts': ['dualpinn = dualpinn.cli:main'],
        },
    provides=[_name],
    )
