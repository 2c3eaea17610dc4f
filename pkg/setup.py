from setuptools import setup


if __name__ == "__main__":
    with open("README.rst") as f:
        long_description = f.read()

    setup(
        classifiers=[
            "Environment :: Console",
            "Intended Audience :: Science/Research",
            "License :: OSI Approved :: MIT License",
            "Operating System :: OS Independent",
            "Programming Language :: Python",
            "Programming Language :: Python :: 3.9",
            "Programming Language :: Python :: 3.10",
            "Programming Language :: Python :: 3.11",
            "Programming Language :: Python :: 3.12",
            "Programming Language :: Python :: Implementation :: CPython",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],
        description=(
            "Zero-divisor graphs of F_p[u]/(u^3): invariants, spectra, "
            "incidence codes and closed-form verification"
        ),
        long_description=long_description,
        long_description_content_type="text/x-rst",
        python_requires=">=3.9",
        setup_requires=["incremental"],
        use_incremental=True,
        install_requires=[
            "attrs>=20.1.0",
            "click>=8.0",
            "constantly",
            "incremental",
            "numpy>=1.21",
            "Twisted>=21.2",
            "zope.interface",
        ],
        entry_points={
            "console_scripts": ["zerodiv = zerodiv._cli:main"],
        },
        keywords="zero-divisor graph spectra topological indices codes",
        license="MIT",
        name="zerodiv",
        packages=["zerodiv", "zerodiv.test"],
        package_dir={"": "src"},
        package_data=dict(
            zerodiv=["py.typed"],
        ),
        zip_safe=False,
    )
