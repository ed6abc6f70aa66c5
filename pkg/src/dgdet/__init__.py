"""dgdet: single-domain generalized object detection toolkit.

Diversifies a single source domain with a catalog of visual corruptions,
aligns detections between clean and corrupted views (KL over class
distributions, squared-L2 over decoded boxes on shared proposals), and
evaluates detection quality (mAP@0.5) and calibration (D-ECE).
"""

__version__ = "0.1.0"
