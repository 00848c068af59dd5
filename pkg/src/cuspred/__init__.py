"""Exact engine for depth-zero cuspidal data of p-adic classical groups.

The package computes, in exact arithmetic over small residue fields:

* self-dual polynomial classes (ffpoly),
* parahoric reduction quotients of the classical families (groups),
* cuspidal data carried by those quotients, with validation and
  representation counts (cuspdata),
* finite Hecke parameters, reducibility points, Jordan sets, and
  parameter shapes (hecke),
* companion censuses across sign twists and inner forms, and the
  resulting packet statistics (packets).
"""

__version__ = "0.1.0"
