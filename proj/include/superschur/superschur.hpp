#pragma once

#include "superschur/charkron.hpp"
#include "superschur/hookschur.hpp"
#include "superschur/integer.hpp"
#include "superschur/laurent.hpp"
#include "superschur/partition.hpp"
#include "superschur/poincare.hpp"
#include "superschur/qseries.hpp"
#include "superschur/residue.hpp"
#include "superschur/verify.hpp"
