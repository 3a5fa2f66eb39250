#include <pybind11/pybind11.h>

PYBIND11_MODULE(_sdplab, m) { m.attr("__version__") = "0.1.0"; }
