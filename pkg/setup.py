from setuptools import setup, find_packages

setup(
    name = "django-frackernel",
    version='0.3.0',
    license = 'BSD',
    description = "Heat kernels of subordinated and inverse-subordinated processes, with their asymptotics",
    long_description = open('README.rst','r').read(),
    packages = find_packages('src', exclude=['test_project', 'test_project.*']),
    package_dir = {'': 'src'},
    include_package_data=True,
    zip_safe=False,
    python_requires='>=3.8',
    install_requires = [
        'Django>=3.2',
        'termcolor',
        'numpy>=1.20',
        'scipy>=1.7',
    ],
    entry_points = {
        'console_scripts': [
            'frackernel = frackernel.cli:main',
        ],
    },
    classifiers = [
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Operating System :: OS Independent',
        'Framework :: Django',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
