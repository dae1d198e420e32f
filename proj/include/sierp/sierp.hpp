#pragma once

#include <sierp/assets.hpp>
#include <sierp/certificate.hpp>
#include <sierp/certify.hpp>
#include <sierp/covering.hpp>
#include <sierp/generators.hpp>
#include <sierp/integer.hpp>
#include <sierp/io.hpp>
#include <sierp/lucas.hpp>
#include <sierp/modarith.hpp>
#include <sierp/primdiv.hpp>
