from setuptools import setup, find_packages

# Core dependencies - Used for core analysis functionality
core_requirements = [
    # Numerics
    "numpy>=1.26.0",
    "scipy>=1.11.0",  # Special functions, quadrature and linear algebra
    "sympy>=1.12",  # Exact rational solves and symbolic Haar moments

    # Data handling and validation
    "pydantic>=2.5.0",
    "pyyaml>=6.0.1",  # Scenario files
    "python-dotenv>=1.0.0",  # For environment variables

    # Utilities
    "rich>=13.6.0",  # Rich text and formatting
    "click>=8.0.0",  # CLI tools
]

setup(
    name="horolab",
    version="0.1.0",
    description="Horospherical Radon transforms, c-functions and propagated symmetric spaces",
    packages=find_packages(include=["horolab", "horolab.*"]),
    install_requires=core_requirements,
    extras_require={
        "dev": [
            "pytest>=7.4.0",
            "pytest-cov>=4.1.0",
            "black>=23.11.0",
            "flake8>=6.1.0",
            "mypy>=1.7.0",
            "pytest-xdist>=3.5.0",
            "pytest-timeout>=2.2.0"
        ],
    },
    python_requires=">=3.10",
    entry_points={
        "console_scripts": [
            "horolab=horolab.cli:main",
        ],
    },
    include_package_data=True,
)
