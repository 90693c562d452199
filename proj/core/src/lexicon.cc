#include "stylo/lexicon.h"

#include <algorithm>
#include <array>
#include <utility>

#include "io.h"
#include "stylo/error.h"

namespace stylo {
namespace {

constexpr std::string_view kPersonalPronouns = R"(# Personal pronouns, all persons and cases.
i
me
my
mine
myself
we
us
our
ours
ourselves
you
your
yours
yourself
yourselves
he
him
his
himself
she
her
hers
herself
it
its
itself
they
them
their
theirs
themselves
)";

constexpr std::string_view kDemonstratives = R"(# Demonstrative determiners and pronouns.
this
that
these
those
)";

constexpr std::string_view kPrivateVerbs = R"(# Private verbs (unobservable mental states and acts) and verbs of utterance.
accept
anticipate
assume
believe
conclude
consider
decide
discover
doubt
expect
fear
feel
find
forget
guess
hope
imagine
know
learn
mean
notice
realise
realize
recognise
recognize
remember
suppose
suspect
think
understand
wonder
# utterance
argue
ask
claim
explain
insist
mention
reply
report
say
state
suggest
tell
)";

constexpr std::string_view kOpinion = R"(# Opinion-bearing adverbials and evaluative words.
clearly
offend
specious
poor
excellent
obviously
surely
certainly
undoubtedly
arguably
frankly
fortunately
unfortunately
sadly
wrong
absurd
)";

constexpr std::string_view kArgument = R"(# Argumentative operators.
if
then
else
almost
because
therefore
however
thus
hence
although
unless
nevertheless
)";

constexpr std::string_view kClauseMarkers = R"(# Clause-boundary markers: conjunctions, relative pronouns, semicolon.
and
but
or
nor
yet
because
although
though
since
unless
while
whereas
whether
if
when
whenever
after
before
until
that
which
who
whom
whose
where
;
)";

constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kBuiltins{{
    {lexicon_names::kPersonalPronouns, kPersonalPronouns},
    {lexicon_names::kDemonstratives, kDemonstratives},
    {lexicon_names::kPrivateVerbs, kPrivateVerbs},
    {lexicon_names::kOpinion, kOpinion},
    {lexicon_names::kArgument, kArgument},
    {lexicon_names::kClauseMarkers, kClauseMarkers},
}};

std::string surface_key(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c;
  });
  return out;
}

}  // namespace

MarkerLexicon::MarkerLexicon(std::string name,
                             const std::vector<std::string>& entries,
                             MatchMode mode)
    : name_(std::move(name)), mode_(mode) {
  for (const auto& raw : entries) {
    const auto entry = detail::trim(raw);
    if (entry.empty()) continue;
    entries_.insert(mode_ == MatchMode::kNormalized ? normalize(entry)
                                                    : surface_key(entry));
  }
  if (entries_.empty()) {
    throw InputError("lexicon '" + name_ + "' has no usable entries");
  }
}

MarkerLexicon MarkerLexicon::parse(std::string_view contents, std::string name,
                                   MatchMode mode) {
  return MarkerLexicon(std::move(name), detail::list_entries(contents), mode);
}

MarkerLexicon MarkerLexicon::load(const std::string& path, std::string name,
                                  MatchMode mode) {
  const auto contents = detail::read_file(path);
  try {
    return parse(contents, std::move(name), mode);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

bool MarkerLexicon::matches(const Token& token) const {
  if (mode_ == MatchMode::kNormalized) {
    return entries_.find(token.normalized) != entries_.end();
  }
  return entries_.find(surface_key(token.surface)) != entries_.end();
}

const std::vector<std::string_view>& builtin_lexicon_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& [name, text] : kBuiltins) out.push_back(name);
    return out;
  }();
  return names;
}

std::string_view builtin_lexicon_text(std::string_view name) {
  for (const auto& [key, text] : kBuiltins) {
    if (key == name) return text;
  }
  throw InputError("unknown lexicon '" + std::string(name) + "'");
}

MarkerLexicon builtin_lexicon(std::string_view name) {
  return MarkerLexicon::parse(builtin_lexicon_text(name), std::string(name));
}

MarkerLexicons MarkerLexicons::builtin() {
  return {builtin_lexicon(lexicon_names::kPersonalPronouns),
          builtin_lexicon(lexicon_names::kDemonstratives),
          builtin_lexicon(lexicon_names::kPrivateVerbs),
          builtin_lexicon(lexicon_names::kOpinion),
          builtin_lexicon(lexicon_names::kArgument)};
}

}  // namespace stylo
