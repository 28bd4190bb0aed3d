#pragma once

// Verse pairs with hand-made, rule-conformant alignments.

#include "blinker/alignment.hpp"
#include "blinker/bitext.hpp"

namespace blinker::testing {

inline const ElisionTable& default_table() {
  static const ElisionTable table = ElisionTable::defaults();
  return table;
}

// NT on "And he said ,".
//  en: 0 And 1 he 2 said 3 , 4 Appoint 5 me 6 thy 7 wages 8 , 9 and 10 I
//      11 will 12 give 13 it 14 .
//  fr: 0 fixe 1 moi 2 ton 3 salaire 4 , 5 et 6 je 7 te 8 le 9 donnerai 10 .
inline VersePair omission_verse() {
  return make_verse_pair(
      "gen:30:28", "en", "fr",
      "And he said , Appoint me thy wages , and I will give it .",
      "fixe moi ton salaire , et je te le donnerai .", default_table());
}

inline Alignment omission_rendering() {
  const VersePair vp = omission_verse();
  Alignment a = empty_alignment(vp, "ann");
  a.nt_source = {0, 1, 2, 3};
  a.nt_target = {7};
  a.links = {{4, 0},  {5, 1},  {6, 2},  {7, 3},  {8, 4},  {9, 5},
             {10, 6}, {11, 9}, {12, 9}, {13, 8}, {14, 10}};
  return a;
}

// Phrasal blocks "to be an husbandman" / "cultiver la terre" and
// "a vineyard" / "de la vigne".
//  en: 0 And 1 Noah 2 began 3 to 4 be 5 an 6 husbandman 7 , 8 and 9 he
//      10 planted 11 a 12 vineyard 13 :
//  fr: 0 Noà 1 commença 2 à 3 cultiver 4 la 5 terre 6 , 7 et 8 planta 9 de
//      10 la 11 vigne 12 .
inline VersePair phrasal_verse() {
  return make_verse_pair(
      "gen:9:20", "en", "fr",
      "And Noah began to be an husbandman , and he planted a vineyard :",
      "Noà commença à cultiver la terre , et planta de la vigne.",
      default_table());
}

inline const IndexSet kHusbandmanSource = {3, 4, 5, 6};
inline const IndexSet kHusbandmanTarget = {3, 4, 5};
inline const IndexSet kVineyardSource = {11, 12};
inline const IndexSet kVineyardTarget = {9, 10, 11};

inline Alignment phrasal_rendering() {
  const VersePair vp = phrasal_verse();
  Alignment a = empty_alignment(vp, "ann");
  a.nt_source = {0};
  a.links = {{1, 0}, {2, 1}, {2, 2}, {7, 6}, {8, 7}, {9, 8}, {10, 8}, {13, 12}};
  a = block_link(a, kHusbandmanSource, kHusbandmanTarget);
  a = block_link(a, kVineyardSource, kVineyardTarget);
  return a;
}

//  fr: 0 je 1 ne 2 mangerai 3 pas 4 .
//  en: 0 I 1 will 2 not 3 eat 4 .
inline VersePair negation_verse() {
  return make_verse_pair("neg:1", "fr", "en", "je ne mangerai pas .",
                         "I will not eat .", default_table());
}

// Only "ne" linked to "not"; "pas" left unlinked.
inline Alignment negation_half_linked() {
  Alignment a = empty_alignment(negation_verse(), "ann");
  a.links = {{0, 0}, {1, 2}, {2, 1}, {2, 3}, {4, 4}};
  return a;
}

inline Alignment negation_both_linked() {
  Alignment a = negation_half_linked();
  a.links.insert({3, 2});
  return a;
}

//  en: 0 the 1 Lord 2 's 3 house 4 .
//  fr: 0 la 1 maison 2 de 3 le 4 Seigneur 5 .
inline VersePair possessive_verse() {
  return make_verse_pair("pos:1", "en", "fr", "the Lord's house .",
                         "la maison du Seigneur .", default_table());
}

inline Alignment possessive_rendering() {
  Alignment a = empty_alignment(possessive_verse(), "ann");
  a.links = {{0, 0}, {1, 3}, {1, 4}, {2, 2}, {3, 1}, {4, 5}};
  return a;
}

}  // namespace blinker::testing
