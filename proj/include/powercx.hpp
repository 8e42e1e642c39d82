#pragma once

#include "powercx/catalog.hpp"
#include "powercx/complex.hpp"
#include "powercx/covering.hpp"
#include "powercx/errors.hpp"
#include "powercx/io.hpp"
#include "powercx/isomorphism.hpp"
#include "powercx/perm.hpp"
#include "powercx/power.hpp"
#include "powercx/power_oracle.hpp"
#include "powercx/surface.hpp"
#include "powercx/symmetry.hpp"
#include "powercx/validate.hpp"
