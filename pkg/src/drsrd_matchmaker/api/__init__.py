"""
API package for the DRSRD Broker.
"""
