"""
horolab: horospherical Radon transforms, c-functions and propagated limits
checked against explicit spherical representation models.
"""

__version__ = "0.1.0"
