from setuptools import setup, find_packages


setup(
    name='Hopfsage',
    version='0.1',
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_data={'hopfsage.fixtures': ['*.hm']},
    python_requires='>=3.9',
    install_requires=[
        'click==8.1.7',
        'Jinja2==3.1.4',
        'marshmallow==3.23.1',
        'python-dotenv==1.0.1',
        'sympy==1.13.3',
    ],
    entry_points={
        'console_scripts': ['hopfsage=hopfsage.cli:main'],
    },
)
