#pragma once

#include "hwav/error.hpp"
#include "hwav/rational.hpp"
#include "hwav/hermitian_type.hpp"
#include "hwav/root_data.hpp"
#include "hwav/poset.hpp"
#include "hwav/diagram.hpp"
#include "hwav/avcore.hpp"
#include "hwav/rs_oracle.hpp"
#include "hwav/census.hpp"
#include "hwav/serialize.hpp"
