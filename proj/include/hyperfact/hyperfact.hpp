#pragma once

#include "hyperfact/axioms.hpp"
#include "hyperfact/errors.hpp"
#include "hyperfact/hyperfield.hpp"
#include "hyperfact/io.hpp"
#include "hyperfact/maxplus_system.hpp"
#include "hyperfact/morphism.hpp"
#include "hyperfact/newton_svg.hpp"
#include "hyperfact/polynomial.hpp"
#include "hyperfact/product.hpp"
#include "hyperfact/rational.hpp"
#include "hyperfact/sign.hpp"
#include "hyperfact/sign_factor.hpp"
#include "hyperfact/tropical.hpp"
#include "hyperfact/tropical_factor.hpp"
