"""Colour edge detection with the quaternion Hardy filter."""
