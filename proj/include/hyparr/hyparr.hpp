#pragma once

#include <hyparr/charpoly.hpp>
#include <hyparr/classes.hpp>
#include <hyparr/errors.hpp>
#include <hyparr/exactlin.hpp>
#include <hyparr/ffcount.hpp>
#include <hyparr/generators.hpp>
#include <hyparr/intpoly.hpp>
#include <hyparr/lattice.hpp>
#include <hyparr/report.hpp>
#include <hyparr/segre.hpp>
