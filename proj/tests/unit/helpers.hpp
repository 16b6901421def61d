#pragma once

#include <string>

#include "invsg/core.hpp"
#include "invsg/io.hpp"

inline std::string data_path(std::string const& name)
{
    return std::string(INVSG_DATA_DIR) + "/" + name;
}

inline invsg::FiniteInvSemigroup data_carrier(std::string const& name)
{
    return invsg::read_finite_subject(data_path(name));
}
