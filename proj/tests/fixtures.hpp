#pragma once

#include "gorelab/path_algebra.hpp"
#include "gorelab/representation.hpp"
#include "gorelab/suite.hpp"

namespace fixtures {

using namespace gorelab;

}  // namespace fixtures
