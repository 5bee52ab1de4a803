#pragma once

#include "twseg/scalar.hpp"
#include "twseg/linalg.hpp"
#include "twseg/polynomial.hpp"
#include "twseg/quadratic.hpp"
#include "twseg/twisting.hpp"
#include "twseg/segre.hpp"
#include "twseg/normality.hpp"
#include "twseg/findim.hpp"
#include "twseg/clifford.hpp"
#include "twseg/json_io.hpp"
