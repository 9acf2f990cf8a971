#pragma once

#include "archfactor/cyclic_dims.hpp"
#include "archfactor/deligne.hpp"
#include "archfactor/error.hpp"
#include "archfactor/gamma_expr.hpp"
#include "archfactor/hodge.hpp"
#include "archfactor/hodge_json.hpp"
#include "archfactor/local_factors.hpp"
#include "archfactor/regdet.hpp"
#include "archfactor/report_json.hpp"
#include "archfactor/verify.hpp"
