#pragma once

#include <crimenews/analytics.hpp>
#include <crimenews/calendar.hpp>
#include <crimenews/classify.hpp>
#include <crimenews/corpus.hpp>
#include <crimenews/error.hpp>
#include <crimenews/geodate.hpp>
#include <crimenews/lexicon.hpp>
#include <crimenews/location.hpp>
#include <crimenews/maprender.hpp>
#include <crimenews/similarity.hpp>
#include <crimenews/textpipe.hpp>
