#pragma once

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "signature.hpp"
#include "labeled.hpp"
#include "criterion.hpp"
#include "engine.hpp"
#include "verify.hpp"
#include "ideal_io.hpp"
#include "run.hpp"
