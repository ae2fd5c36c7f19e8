#pragma once

#include <iosfwd>

#include "plg/relations.hpp"

namespace plg {

// Grammar-compatible canonical text forms (parse . print = identity).
std::string serialize_field(const FieldElem& f);
std::string serialize_lincomb(const LinComb& e);

// Versioned line-oriented database file:
//   plgdb 1
//   ctx vars=t,s zeta=1
//   gen weight=2 element=<lincomb> prov=<provenance>
void save_db(const RelationDB& db, std::ostream& os);
std::string db_text(const RelationDB& db);

// Loads generators verbatim (re-checking the coideal invariant).
void load_db(RelationDB& db, std::istream& is);

// Re-derives every generator from its provenance record into a fresh
// database; used by `relations replay`.
void replay_db(RelationDB& fresh, const RelationDB& recorded);

}  // namespace plg
