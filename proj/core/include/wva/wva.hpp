#pragma once

#include "wva/amplification_limit.hpp"
#include "wva/error.hpp"
#include "wva/fbg.hpp"
#include "wva/interrogation.hpp"
#include "wva/optics.hpp"
#include "wva/osa.hpp"
#include "wva/scenario_config.hpp"
#include "wva/spectral.hpp"
#include "wva/text.hpp"
