#pragma once

// Umbrella header for the qsb library.

#include "qsb/qcore.hpp"
#include "qsb/orthopoly.hpp"
#include "qsb/measure.hpp"
#include "qsb/sbt.hpp"
#include "qsb/operators.hpp"
#include "qsb/verify.hpp"
#include "qsb/io.hpp"
