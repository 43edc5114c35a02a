#pragma once

#include "xsdyn/channels.hpp"
#include "xsdyn/concurrence.hpp"
#include "xsdyn/coupling.hpp"
#include "xsdyn/density.hpp"
#include "xsdyn/eigen.hpp"
#include "xsdyn/errors.hpp"
#include "xsdyn/events.hpp"
#include "xsdyn/master_equation.hpp"
#include "xsdyn/matrix.hpp"
#include "xsdyn/propagator.hpp"
#include "xsdyn/states.hpp"
#include "xsdyn/trajectory.hpp"
