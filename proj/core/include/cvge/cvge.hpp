#pragma once

#include "cvge/closed_form.hpp"
#include "cvge/eigensolver.hpp"
#include "cvge/error.hpp"
#include "cvge/full_state.hpp"
#include "cvge/graph.hpp"
#include "cvge/kernel.hpp"
#include "cvge/quadrature.hpp"
