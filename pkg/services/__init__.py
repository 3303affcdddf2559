"""
Computation services package for the Spectral Turan Workbench
Contains the graph codec, canonical forms, spectral solver, detectors,
enumeration, extremal search and report rendering
"""
