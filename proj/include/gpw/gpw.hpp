#ifndef GPW_GPW_HPP
#define GPW_GPW_HPP

#include "gpw/bass_serre.hpp"
#include "gpw/coefficients.hpp"
#include "gpw/errors.hpp"
#include "gpw/graph.hpp"
#include "gpw/growth.hpp"
#include "gpw/io.hpp"
#include "gpw/search.hpp"
#include "gpw/sharpness.hpp"
#include "gpw/support.hpp"
#include "gpw/vertex_set.hpp"
#include "gpw/word.hpp"

#endif  // GPW_GPW_HPP
