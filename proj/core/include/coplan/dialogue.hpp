#pragma once

// Template dialogue for prototypes. Line order is fixed:
//   Agent2: project start announcement
//   Agent1: decomposition question
//   Agent2: task list
//   Agent1: durations
//   Agent2: dependency sentences
//   Agent1, Agent2: one line each with availability and breaks
//
// Names must not contain ", " or ". " since those separate list items and
// sentences in the grammar.

#include "coplan/model.hpp"

#include <string>

namespace coplan {

std::string render_dialogue(const ProblemInstance& instance);

/// Asks for "the earliest time (in GMT)" (short) or "the earliest date" (long).
std::string render_question(const ProblemInstance& instance);

/// Reads a rendered dialogue back into raw fields. Tasks are labelled Task A,
/// Task B, Task C in listing order and speakers Agent1, Agent2 in the order of
/// their availability lines. Throws ParseError on text outside the grammar.
RawInstance parse_dialogue(const std::string& text);

} // namespace coplan
