#pragma once

#include "tropt/errors.hpp"
#include "tropt/format.hpp"
#include "tropt/inequalities.hpp"
#include "tropt/matrix.hpp"
#include "tropt/optimizer.hpp"
#include "tropt/oracle.hpp"
#include "tropt/project_io.hpp"
#include "tropt/scheduling.hpp"
#include "tropt/semifield.hpp"
