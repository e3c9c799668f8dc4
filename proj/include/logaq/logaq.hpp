#pragma once

#include "logaq/io/input.hpp"
#include "logaq/io/report.hpp"
#include "logaq/kcomplex.hpp"
#include "logaq/logls.hpp"
#include "logaq/logsurj.hpp"
