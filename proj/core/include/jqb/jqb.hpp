#pragma once

#include "jqb/errors.hpp"
#include "jqb/geomclass.hpp"
#include "jqb/hardy.hpp"
#include "jqb/oracle.hpp"
#include "jqb/qbessel.hpp"
#include "jqb/qcore.hpp"
