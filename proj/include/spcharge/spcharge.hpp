#pragma once

#include "shapes.hpp"
#include "tableaux.hpp"
#include "typea.hpp"
#include "typec.hpp"
#include "direct.hpp"
#include "symfun.hpp"
