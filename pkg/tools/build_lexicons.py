#!/usr/bin/env python3
"""Generate the committed lexicon data files from the curated seed banks.

Outputs (deterministic, sorted):
  src/stancelab/data/sentiment_lexicon.txt   word<TAB>valence
  src/stancelab/data/emotion_lexicon.txt     word<TAB>category<TAB>flag

The sentiment file follows the classic rule-based-analyzer layout (extra
columns are permitted and ignored by the loader), so the official published
lexicon can be dropped in unchanged. The emotion file follows the standard
word-association layout: ten category rows per word (eight emotion
categories plus the two polarity rows), flags 0/1.

Seed DSL: a bank header `@ <class> [emotions]` sets the word class and the
default emotion set for the entries that follow. Classes: a=adjective,
v=verb, n=noun, x=fixed (no expansion), e=emotion-only tag (no expansion;
sentiment entry only when valence is nonzero). Entries are `word:valence`
tokens; a trailing `?` suppresses the duplicate-seed check when a word
appears in a second bank for extra emotion tags. Flags: `+u` adds an
`un`-prefixed form with dampened flipped valence, `+s` adds a plural,
`+er` adds agent nouns, `+fl` adds -ful/-less derivative pairs.
Morphological variants inherit the stem's valence and emotion set; seed
entries always take precedence over generated variants.
"""

from __future__ import annotations

import sys
from pathlib import Path

EMOTIONS = ("anger", "anticipation", "disgust", "fear", "joy", "sadness", "surprise", "trust")
# category order used inside the emitted file (matches the common published layout)
FILE_CATEGORIES = ("anger", "anticipation", "disgust", "fear", "joy",
                   "negative", "positive", "sadness", "surprise", "trust")

VOWELS = "aeiou"

# Words the scoring rules treat specially (intensity boosters, negations,
# idiom particles). They must never appear as lexicon entries or the rules
# would skip them; mirrors the constants in stancelab.affect.
RULE_WORDS = frozenset("""
absolutely amazingly awfully completely considerable considerably decidedly
deeply effing enormous enormously entirely especially exceptional
exceptionally extreme extremely fabulously flipping flippin frackin fracking
fricking frickin frigging friggin fully fuckin fucking fuggin fugging greatly
hella highly hugely incredible incredibly intensely major majorly more most
particularly purely quite really remarkably so substantially thoroughly total
totally tremendous tremendously uber unbelievably unusually utter utterly very
almost barely hardly kinda kindof less little marginal marginally occasional
occasionally partly scarce scarcely slight slightly somewhat sorta sortof
aint arent cannot cant couldnt darent didnt doesnt don't dont hadnt hasnt
havent isnt mightnt mustnt neither neednt never none nope nor not nothing
nowhere oughtnt shant shouldnt uhuh wasnt werent without wont wouldnt rarely
seldom despite least kind but
""".split())

SEEDS = r"""
# ================================================================ positive
@ a joy
happy:2.7+u glad:2.0 cheerful:2.3 joyful:2.9 merry:2.5 jolly:2.2 blissful:2.9
delighted:2.9 ecstatic:3.2 elated:3.0 euphoric:3.1 gleeful:2.6 jubilant:2.9
content:1.6 pleased:1.9 upbeat:1.9 sunny:1.8 chipper:1.7 buoyant:1.9
radiant:2.4 thrilled:2.8 overjoyed:3.0 lighthearted:2.0 carefree:1.9
exuberant:2.6 festive:2.1 giddy:1.8 perky:1.5 playful:1.8 smiley:1.9
blithe:1.7 convivial:1.8 jovial:2.1 mirthful:2.3 sprightly:1.6 jaunty:1.4
@ a
excellent:3.1 superb:3.2 outstanding:3.1 magnificent:3.4 wonderful:2.7+u
marvelous:3.0 fabulous:2.9 fantastic:2.6 terrific:2.6 splendid:3.0
superior:2.3 remarkable:2.4+u impressive:2.3+u admirable:2.6
commendable:2.3 exemplary:2.8 stellar:2.8 sublime:2.8 glorious:2.9 grand:2.2
brilliant:2.8 phenomenal:2.9 extraordinary:2.5 flawless:2.9
perfect:2.7 ideal:2.4 prime:1.6 premium:1.8 topnotch:2.7 worthy:1.9+u
valuable:2.1 precious:2.7 priceless:2.9 favorable:2.1+u beneficial:1.9
advantageous:1.9 productive:1.8+u effective:1.9 efficient:1.9 useful:1.9
helpful:1.8+u constructive:1.7 practical:1.4 convenient:1.5 suitable:1.3+u
appropriate:1.2 satisfactory:1.4+u decent:1.6 solid:1.3 notable:1.4
improved:1.8 refined:1.5 polished:1.4 upgraded:1.4 optimal:1.9 peerless:2.3
matchless:2.2 unrivaled:2.2 unsurpassed:2.3 supreme:2.4 masterly:2.2
@ a joy,trust
loving:2.9+u affectionate:2.4 tender:1.9 devoted:2.2 adoring:2.6 fond:1.9
caring:2.2+u warm:1.7 warmhearted:2.5 compassionate:2.5 kindhearted:2.6
friendly:2.2+u welcoming:2.0+u hospitable:2.0 amiable:2.0 cordial:1.8
gracious:2.2 benevolent:2.4 generous:2.3 charitable:2.1 thoughtful:2.0
considerate:2.1 supportive:2.1 nurturing:2.0 gentle:1.8 kindly:2.1
neighborly:1.7 courteous:1.8 polite:1.7 respectful:1.9 humane:2.0
magnanimous:2.1 selfless:2.3 altruistic:2.2 empathetic:2.0 sympathetic:1.7
@ a trust
calm:1.3 peaceful:2.2 serene:2.1 tranquil:2.0 relaxed:1.6 soothing:1.8
restful:1.6 mellow:1.2 placid:1.3 reassuring:1.8 comforting:1.9 stable:1.3+u
secure:1.6+u safe:1.8+u steady:1.2+u dependable:2.0 reliable:2.0+u
trustworthy:2.6+u trusty:1.9 credible:1.7 legitimate:1.5 lawful:1.4+u
harmonious:2.1 orderly:1.2 consistent:1.2+u coherent:1.1 composed:1.2
unruffled:1.1 peaceable:1.9 amicable:1.8 diplomatic:1.3 conciliatory:1.3
@ a trust
honest:2.3 loyal:2.3 faithful:2.3+u sincere:2.2 truthful:2.3+u genuine:1.9
fair:1.6+u just:1.4+u ethical:2.0+u honorable:2.4 noble:2.2 virtuous:2.4
upright:1.8 principled:1.9+u righteous:1.9 scrupulous:1.7+u authentic:1.7
transparent:1.2 accountable:1.1+u dutiful:1.5 impartial:1.3 objective:0.9
candid:1.4 forthright:1.5 straightforward:1.2 incorruptible:2.2
@ a
smart:1.7 clever:2.0 wise:2.2+u intelligent:2.1+u insightful:2.1 astute:1.9
sharp:1.2 brainy:1.8 knowledgeable:2.0 sensible:1.7 rational:1.4 prudent:1.6
savvy:1.7 perceptive:1.8 discerning:1.7 ingenious:2.4 erudite:1.8
resourceful:1.9 articulate:1.7 eloquent:2.1 literate:1.2 learned:1.5
gifted:2.3 talented:2.2 skilled:1.9+u skillful:2.0 adept:1.7 capable:1.6
competent:1.5+u proficient:1.8 masterful:2.3 accomplished:2.1 versatile:1.5
shrewd:1.4 judicious:1.6 lucid:1.2 methodical:1.0 analytical:0.9 scholarly:1.3
@ a joy
beautiful:2.9 pretty:2.2 lovely:2.8 gorgeous:3.0 elegant:2.4 graceful:2.3
charming:2.6 attractive:1.9+u handsome:2.2 stunning:2.7 dazzling:2.7
exquisite:2.9 alluring:2.1 picturesque:2.2 scenic:1.8
adorable:2.5 cute:2.0 delightful:2.8 pleasant:2.3+u enchanting:2.6
captivating:2.4 breathtaking:2.8 majestic:2.7 ornate:1.3 luminous:1.8
resplendent:2.5 ravishing:2.6 beauteous:2.4 comely:1.7 dashing:1.9
photogenic:1.5 stylish:1.7 chic:1.6 glamorous:2.1 flattering:1.5+u
@ a trust
healthy:1.9+u strong:2.1 robust:1.8 vigorous:1.7 fit:1.4+u energetic:1.9
lively:1.9 vibrant:2.1 sturdy:1.4 hearty:1.8 wholesome:2.0 nourishing:1.8
nutritious:1.9 fresh:1.3 clean:1.6+u pure:2.0 pristine:2.3 immaculate:2.4
spotless:2.0 sanitary:1.2+u hygienic:1.3 invigorating:2.0 restorative:1.7
thriving:2.3 flourishing:2.4 resilient:1.8 hardy:1.4 agile:1.4 nimble:1.4
athletic:1.2 muscular:0.9 spry:1.3 limber:0.9 sound:1.1+u curative:1.6
medicinal:0.8 therapeutic:1.5 hale:1.3 blooming:1.7 rejuvenated:1.9
@ a anticipation,joy
hopeful:2.2 optimistic:2.1 promising:2.0+u eager:1.7 enthusiastic:2.3
excited:2.4 keen:1.5 motivated:1.9+u inspired:2.3 ambitious:1.9 determined:1.6
driven:1.3 aspiring:1.6 expectant:1.2 encouraged:1.9 confident:1.9+u
assured:1.5 emboldened:1.5 heartened:1.9 zealous:1.4
spirited:1.6 energized:1.8 galvanized:1.4 impassioned:1.6 avid:1.3
@ a joy,surprise
funny:1.9+u hilarious:2.6 amusing:1.7 witty:2.0 humorous:1.9 entertaining:2.0
comical:1.6 whimsical:1.3 quirky:0.9 zany:1.1 silly:0.7 goofy:0.8
droll:1.1 farcical:0.6 waggish:1.0 joking:1.0 jesting:0.9 uproarious:1.9
@ a surprise,joy
amazing:2.8 astonishing:2.0 astounding:2.0 wondrous:2.5 miraculous:2.7
magical:2.4 spectacular:2.8 sensational:2.4 striking:1.6 marvellous:3.0
dazzled:2.2 awestruck:1.9 electrifying:2.1 thrilling:2.4 exhilarating:2.5
exciting:2.2
@ a joy,anticipation
innovative:1.9 creative:1.9+u original:1.3+u imaginative:1.8 inventive:1.8
visionary:1.9 pioneering:1.7 groundbreaking:1.9 novel:1.1 modern:0.8
futuristic:0.9 cutting-edge:1.6 trailblazing:1.7 transformative:1.6
@ a trust
diligent:1.7 industrious:1.6 hardworking:1.9 dedicated:1.8 committed:1.4
persistent:1.1 tenacious:1.3 steadfast:1.6 disciplined:1.3+u meticulous:1.5
thorough:1.2 careful:1.3 attentive:1.4+u vigilant:1.2 conscientious:1.6
punctual:1.1 studious:1.2 earnest:1.5 untiring:1.3 unflagging:1.2
@ a joy,trust
lucky:1.9+u fortunate:1.9+u blessed:2.6 charmed:1.8 privileged:1.5
favored:1.6 prosperous:2.2 wealthy:1.7 affluent:1.5 rich:1.8 abundant:1.6
plentiful:1.5 ample:1.2 bountiful:1.9 lucrative:1.7 profitable:1.8+u
booming:1.7 golden:1.6 fruitful:1.8+u rewarding:2.1+u gainful:1.4
@ a joy,trust
famous:1.7 renowned:1.9 acclaimed:2.1 prestigious:2.0 distinguished:1.9
eminent:1.7 illustrious:2.0 legendary:2.1 iconic:1.7 popular:1.9+u
beloved:2.8 admired:2.3 revered:2.0 esteemed:2.1 celebrated:2.2
respected:2.1 venerable:1.7 famed:1.6 reputable:1.8
@ a joy
delicious:2.5 tasty:1.9 yummy:2.4 savory:1.5 delectable:2.4 scrumptious:2.5
luscious:2.1 appetizing:1.8+u flavorful:1.6 succulent:1.8 mouthwatering:2.2
palatable:1.1+u refreshing:1.9 zesty:1.3 toothsome:1.6
@ a anticipation
interesting:1.7+u fascinating:2.3 intriguing:1.9 engaging:1.8 compelling:1.7
gripping:1.6 riveting:1.9 absorbing:1.4 stimulating:1.7 enlightening:1.9
informative:1.4 educational:1.2 instructive:1.2 eye-opening:1.6
thought-provoking:1.6
@ a trust
accurate:1.4+u correct:1.5 precise:1.3 exact:1.0 valid:1.2+u plausible:0.9
reasonable:1.4+u justified:1.3+u verifiable:1.0 factual:1.1 rigorous:1.1
proven:1.4+u documented:0.8 substantiated:1.2+u evidenced:0.9 grounded:0.7
@ a anticipation,trust
brave:2.1 bold:1.7 courageous:2.3 fearless:1.9 valiant:2.2 daring:1.5
gallant:1.9 intrepid:1.8 plucky:1.5 gutsy:1.3 audacious:1.1
stalwart:1.6 undaunted:1.6 dauntless:1.8 lionhearted:2.2 mettlesome:1.3
@ a trust
sustainable:1.4+u renewable:1.2 organic:0.9 natural:1.1+u ecological:0.8
recyclable:0.9 biodegradable:0.8 conservationist:0.9
@ a joy,trust
angelic:2.2 saintly:2.1 divine:2.5 celestial:1.8 serendipitous:1.9
auspicious:1.7 propitious:1.5 opportune:1.3 fortuitous:1.5 providential:1.6
idyllic:2.3 dreamy:1.8 rosy:1.5 cozy:1.8 snug:1.4 homey:1.4 inviting:1.7+u
heartwarming:2.6 endearing:2.1 winsome:1.8 likable:1.9 lovable:2.5
personable:1.7 approachable:1.5 affable:1.8 genial:1.8 humble:1.4
modest:1.2 unassuming:1.0 sweet:1.8 bighearted:2.3 goodhearted:2.3
softhearted:1.9 tenderhearted:2.0
@ v joy,anticipation
succeed:2.2 achieve:2.1 accomplish:2.1 triumph:2.7 prosper:2.3
thrive:2.4 flourish:2.4 excel:2.4 improve:1.9 advance:1.4 progress:1.6
attain:1.5 realize:1.2 fulfill:1.9 master:1.8 conquer:1.6
surpass:1.7 outperform:1.8 elevate:1.5 ascend:1.2 soar:2.0 blossom:2.0
bloom:1.9 ripen:1.0 mature:0.9 evolve:1.0 accelerate:0.8 streamline:1.0
optimize:1.3 maximize:1.1 enhance:1.6 boost:1.5 amplify:0.9 augment:0.8
@ v joy,trust
praise:2.7 admire:2.4 applaud:2.4 celebrate:2.7 cherish:2.8 adore:2.9
appreciate:2.2 commend:2.2 compliment:2.1 congratulate:2.4 endorse:1.7
honor:2.4 respect:2.1 revere:2.3 treasure:2.6 value:1.6 esteem:2.1
salute:1.9 thank:1.9 welcome:2.0 embrace:1.9 favor:1.6 laud:2.2 exalt:2.2
acclaim:2.2 extol:2.1 glorify:1.9 idolize:1.8 toast:1.5 fete:1.6
@ v trust,joy
help:1.7+er support:1.7 encourage:2.3 comfort:1.9 console:1.5 heal:2.2
cure:2.0 protect:1.7 rescue:2.2 save:2.2 empower:2.2 uplift:2.3
delight:2.8 amuse:1.7 entertain:1.8 please:1.9 satisfy:1.8 gratify:1.9
enrich:2.0 benefit:1.9 reward:2.3 nurture:2.0 assist:1.6 aid:1.4
strengthen:1.7 restore:1.5 revive:1.6 rejuvenate:2.0 refresh:1.7 inspire:2.5
motivate:2.0 reassure:1.8 befriend:1.9 mend:1.3 enliven:1.8
liberate:1.9 emancipate:1.8 vindicate:1.3 shelter:1.2
shield:1.1 safeguard:1.5 fortify:1.2 bolster:1.3 facilitate:1.0 enable:1.1
@ v trust
trust:2.3 promise:1.5 assure:1.4 guarantee:1.7 depend:0.8 rely:0.9
confide:1.1 entrust:1.4 affirm:1.2 verify:0.9 validate:1.1 certify:1.0
vouch:1.3 pledge:1.3 commit:1.1 cooperate:1.5 collaborate:1.4 unite:1.5
reconcile:1.4 agree:1.5 consent:0.9 approve:1.8 accept:1.1 accommodate:1.1
abide:0.8 comply:0.7 harmonize:1.2 mediate:0.9
@ v trust,joy
educate:1.4 enlighten:1.8 inform:0.8 instruct:0.7 guide:1.2
mentor:1.4 coach:0.9 tutor:0.8 edify:1.3 cultivate:1.2 foster:1.3
illuminate:1.4 clarify:1.0 demystify:0.9 acquaint:0.6 apprise:0.5
@ v joy,anticipation
create:1.4 craft:1.0 design:0.8 invent:1.3 innovate:1.5
pioneer:1.4 develop:0.9 construct:0.6 devise:0.7 forge:0.8 compose:0.8
originate:0.7 conceive:0.7 fashion:0.6 engineer:0.7 formulate:0.6
@ v joy,trust
donate:1.7 contribute:1.2 grant:1.3 bestow:1.4 endow:1.3 provide:0.9
supply:0.6 furnish:0.6 offer:0.9 share:1.2 volunteer:1.5 dedicate:1.2
impart:0.8 allot:0.5 allocate:0.4 award:1.8 confer:0.9
@ v joy
laugh:2.2 giggle:1.7 chuckle:1.6 grin:1.8 beam:1.9 smile:2.1
rejoice:2.7 revel:1.9 savor:1.8 relish:1.8 enjoy:2.2 jubilate:2.4
frolic:1.8 romp:1.3 bask:1.4 luxuriate:1.5 gladden:2.2
cheer:2.3 hearten:1.9 captivate:2.0 charm:2.1 enchant:2.2 dazzle:2.2
fascinate:2.0 impress:1.9 astound:1.7 amaze:2.5 astonish:1.7 awe:1.8
@ v trust
cleanse:1.4 purify:1.5 sanitize:1.0 sterilize:0.7 disinfect:0.9 tidy:1.1
polish:0.9 launder:0.3 scrub:0.4 renovate:1.0 refurbish:1.0 remodel:0.8
repair:1.0 reconstruct:0.7 recondition:0.8 revitalize:1.5
@ v joy,anticipation
attract:1.2 entice:1.1 tempt:0.6 flatter:1.2 woo:1.1 pamper:1.4
indulge:1.0 regale:1.2 tickle:1.0 exhilarate:2.2 thrill:2.2 electrify:1.7
energize:1.7 invigorate:1.8 galvanize:1.2 enthuse:1.6 enthrall:1.9
mesmerize:1.5 elate:2.4 embolden:1.4
@ n joy
joy:2.8 happiness:2.9 pleasure:2.5 bliss:2.9 paradise:3.0
gift:1.9+s blessing:2.6+s miracle:2.8+s victory:2.8+s success:2.7
prosperity:2.5 fortune:2.1 luck:1.8 celebration:2.5+s festivity:2.2
cheerfulness:2.3 laughter:2.6 sunshine:2.3 rainbow:1.9+s
holiday:1.9+s jubilee:2.2 merriment:2.4 glee:2.7 euphoria:3.0 ecstasy:3.1
delight:2.8? treasure:2.6? triumph:2.7? honor:2.4? cheerio:1.4
@ n joy,trust
love:3.2 peace:2.5 harmony:2.3 friendship:2.4 loyalty:2.2 kindness:2.5
generosity:2.3 gratitude:2.3 compassion:2.3 affection:2.4 warmth:1.9
devotion:2.1 sympathy:1.5 empathy:1.7 goodwill:2.2 charity:2.0 mercy:1.9+fl
grace:1.9+fl comfort:1.7? relief:1.9 solace:1.5 serenity:2.1 camaraderie:2.0
fellowship:1.9 fondness:2.0 tenderness:2.0 benevolence:2.2 altruism:2.1
ally:1.4+s friend:2.2+s companion:1.7+s supporter:1.6+s benefactor:1.9+s
patron:1.2+s savior:2.4+s guardian:1.6+s sage:1.5+s genius:2.3
virtuoso:1.9+s talent:1.9+s asset:1.4+s boon:1.9+s windfall:1.9+s
jackpot:2.2+s bonus:1.9 perk:1.4+s upside:1.3 dividend:1.1+s
@ n trust,anticipation
hope:1.9+fl freedom:2.3 justice:2.3 truth:1.9+fl wisdom:2.2 courage:2.2
dignity:2.1 integrity:2.3 honesty:2.4 virtue:2.1 merit:1.6
advantage:1.7+s opportunity:1.8 potential:1.2
security:1.5 safety:1.8 stability:1.4 confidence:1.8 faith:1.9+fl
assurance:1.4 remedy:1.5 solution:1.4+s improvement:1.8+s
breakthrough:2.1+s innovation:1.6+s growth:1.5 achievement:2.2+s
accomplishment:2.2+s excellence:2.9 quality:1.4 strength:1.7 vitality:1.8
health:1.7 wellness:1.9 nutrient:1.2+s vitamin:1.0+s protein:0.6+s
cleanliness:1.5 benefit:1.9? promise:1.5? progress:1.6? guarantee:1.7?
liberty:2.2 equality:1.9 fairness:2.0 prudence:1.3 valor:2.1
@ n joy,anticipation
festival:1.6+s concert:1.1+s wedding:1.8+s graduation:1.7+s promotion:1.5+s
prize:1.9+s trophy:1.8 medal:1.6+s accolade:1.9+s milestone:1.4+s
delicacy:1.4 dessert:1.3+s treat:1.5+s vacation:1.7+s getaway:1.5+s
adventure:1.5+s discovery:1.5 fanfare:1.2 jamboree:1.4 shindig:1.1
@ x
good:1.9 great:3.1 best:3.2 better:1.9 fine:0.8 nice:1.8 well:1.1 super:2.9
bravo:2.7 hooray:2.4 hurrah:2.3 yay:2.4 wow:2.8 whoa:1.1 cool:1.3 neat:1.7
awesome:3.1 epic:2.3 winner:2.8 winning:2.4 champ:2.4 champion:2.4
champions:2.4 heavenly:2.6 heaven:2.3 angel:2.0 angels:2.0 hero:2.6
heroes:2.6 heroic:2.6 lol:1.6 haha:2.0 hehe:1.5 yes:1.7 yeah:1.2 yep:1.2
agreeable:1.8 alive:1.6 okay:0.9 ok:0.9 alright:1.0 thanks:1.9
freer:1.5 freest:1.9 free:1.8 easier:1.5 easiest:1.7 easy:1.3 easygoing:1.5
paramount:1.5 foremost:1.2 jewel:1.8 gem:1.9 gems:1.9 pearl:1.3 pearls:1.3
win:2.8 wins:2.7 won:2.7 overcome:1.5 overcomes:1.5 overcame:1.5
overcoming:1.5 forgive:1.9 forgives:1.9 forgave:1.8 forgiven:1.9
forgiving:2.2 forgiveness:2.1 woohoo:2.6 huzzah:2.3 stoked:2.2 rad:2.2
legend:2.0 legends:2.0 kudos:2.2 cheers:1.9 congrats:2.4 congratulations:2.6
thx:1.7 ty:1.6 gg:1.4 masterpiece:2.9 masterpieces:2.9 utopia:2.4
godsend:2.6 lifesaver:2.5 lifesavers:2.5 teach:1.1 teaches:1.1 taught:1.0
teaching:1.1 build:1.0 builds:1.0 built:1.0 rebuild:1.0 rebuilds:1.0
rebuilt:1.0 uphold:1.3 upholds:1.3 upheld:1.3 upholding:1.3 sunrise:1.4
sunset:1.2 puppy:1.9 puppies:1.9 kitten:1.8 kittens:1.8 baby:1.4 babies:1.4
cuddle:2.0 cuddles:1.9 cuddly:2.1 hug:1.9 hugs:1.8 kiss:1.9 kisses:1.8
sweetheart:2.4 darling:2.2 dear:1.4 honey:1.6 soulmate:2.5 soulmates:2.5
bestie:2.0 besties:2.0 buddy:1.4 buddies:1.4 pal:1.3 pals:1.3 amigo:1.3
amigos:1.3 loved:2.9 loves:3.0 lovers:1.9 lover:1.9 :):2.0 :-):2.2 :d:2.3 :-d:2.4 ;):1.1 ;-):1.3 =):2.0 ^_^:1.9
<3:2.4 \o/:2.1 8):1.5 :p:1.2 :-p:1.3

# ================================================================ negative
@ a sadness
sad:-2.1 sorrowful:-2.2 mournful:-2.1 gloomy:-1.9 melancholy:-1.5
miserable:-2.5 depressed:-2.2 dejected:-2.1 despondent:-2.1 downcast:-1.7
heartbroken:-2.6 forlorn:-1.9 woeful:-2.0 dismal:-1.9 crestfallen:-1.8
somber:-1.3 grim:-1.8 bleak:-1.9 cheerless:-1.8 joyless:-1.9 sullen:-1.5
glum:-1.6 morose:-1.7 dreary:-1.6 desolate:-2.1 hopeless:-2.0 helpless:-1.9
lonely:-1.8 lonesome:-1.7 isolated:-1.3 abandoned:-1.9 neglected:-1.8
grieving:-2.2 tearful:-1.7 anguished:-2.3 distraught:-2.1 inconsolable:-2.2
heartsick:-2.2 downhearted:-1.9 dispirited:-1.7 demoralized:-1.9
@ a fear
afraid:-2.0 scared:-1.9 frightened:-2.1 terrified:-2.7 fearful:-2.0
anxious:-1.6 worried:-1.5 nervous:-1.4 panicked:-2.2 alarmed:-1.6
apprehensive:-1.2 uneasy:-1.3 dreadful:-2.4 horrifying:-2.8 terrifying:-2.8
menacing:-2.1 ominous:-1.7 sinister:-2.1 creepy:-1.6 eerie:-1.3
frightening:-2.2 scary:-1.9 spooky:-1.2 threatening:-2.1 perilous:-2.0
hazardous:-1.9 dangerous:-2.1 risky:-1.3 unsafe:-1.8 precarious:-1.3
vulnerable:-1.2 defenseless:-1.6 insecure:-1.5 panicky:-1.8 timid:-1.0
skittish:-0.9 jumpy:-1.0 petrified:-2.3 aghast:-1.8 horrified:-2.6
@ a anger
angry:-2.0 mad:-1.9 furious:-2.6 enraged:-2.6 irate:-2.3 livid:-2.3
outraged:-2.3 irritated:-1.7 annoyed:-1.6 resentful:-1.8 bitter:-1.6
hostile:-2.1 aggressive:-1.6 belligerent:-1.9 wrathful:-2.4 indignant:-1.6
infuriated:-2.5 incensed:-2.2 seething:-2.0 fuming:-1.9 irritating:-1.8
maddening:-2.0 infuriating:-2.4 enraging:-2.3 vexing:-1.5 galling:-1.5
antagonistic:-1.7 combative:-1.4 confrontational:-1.4 quarrelsome:-1.6
cantankerous:-1.4 irascible:-1.5 splenetic:-1.5 churlish:-1.4 surly:-1.4
@ a disgust
disgusting:-2.4 gross:-1.9 revolting:-2.5 repulsive:-2.6 vile:-2.8 foul:-2.3
nasty:-2.3 filthy:-2.3 rotten:-2.2 putrid:-2.5 sickening:-2.4 nauseating:-2.3
loathsome:-2.6 repugnant:-2.4 squalid:-2.0 grimy:-1.5 slimy:-1.5 moldy:-1.5
rancid:-2.1 fetid:-2.0 grotesque:-2.0 distasteful:-1.7 unsavory:-1.5
repellent:-2.0 odious:-2.4 abhorrent:-2.6 detestable:-2.6 despicable:-2.7
grubby:-1.2 scummy:-1.9 sordid:-1.8 unclean:-1.5 unhygienic:-1.4
@ a
awful:-2.0 terrible:-2.1 horrible:-2.5 atrocious:-2.7 abysmal:-2.3
appalling:-2.4 lousy:-1.9 inferior:-1.5 mediocre:-0.8 shoddy:-1.7
substandard:-1.5 deficient:-1.4 faulty:-1.6 flawed:-1.4 defective:-1.7
useless:-1.8 worthless:-2.3 pointless:-1.6 futile:-1.6 ineffective:-1.4
inefficient:-1.3 inadequate:-1.5 unacceptable:-1.9 horrendous:-2.6
horrid:-2.4 ghastly:-2.3 hideous:-2.4 dire:-2.0 catastrophic:-2.8
disastrous:-2.6 calamitous:-2.4 ruinous:-2.2 damaging:-1.9 detrimental:-1.8
harmful:-2.0? destructive:-2.4 counterproductive:-1.5 problematic:-1.3
troublesome:-1.6 burdensome:-1.5 cumbersome:-1.1 bothersome:-1.4
deplorable:-2.3 lamentable:-1.9 regrettable:-1.6 poor:-2.1
subpar:-1.3 botched:-1.7 bungled:-1.6 slipshod:-1.5 half-baked:-1.2
@ a anger,disgust
dishonest:-2.2 corrupt:-2.6 deceitful:-2.2 fraudulent:-2.4 crooked:-1.9
unscrupulous:-2.1 immoral:-2.2 unethical:-2.1 treacherous:-2.4 sneaky:-1.4
shady:-1.5 underhanded:-1.8 manipulative:-1.9 exploitative:-2.0 corrupted:-2.3
unjust:-2.0 unfair:-1.9 biased:-1.2 prejudiced:-1.9 discriminatory:-2.0
hypocritical:-1.9 duplicitous:-2.0 untrustworthy:-2.2 disloyal:-1.9
unfaithful:-2.0 perfidious:-2.1 venal:-1.8 sleazy:-1.8 devious:-1.6
mendacious:-2.0 dishonorable:-2.2 unprincipled:-1.9 amoral:-1.6
@ a sadness,fear
sick:-1.7 ill:-1.6 weak:-1.6 frail:-1.3 feeble:-1.5 ailing:-1.5 infirm:-1.4
diseased:-2.1 unhealthy:-1.8 fragile:-1.0 brittle:-0.9 malnourished:-1.9
injured:-1.7 wounded:-1.9 crippled:-2.0 debilitated:-1.8 exhausted:-1.4
weary:-1.3 fatigued:-1.2 drained:-1.3 sickly:-1.7 contagious:-1.4
infectious:-1.3 chronic:-1.1 terminal:-1.8 fatal:-2.6 deadly:-2.6
lethal:-2.4 toxic:-2.2 poisonous:-2.3 carcinogenic:-2.3 cancerous:-2.4
anemic:-1.1 bedridden:-1.6 comatose:-1.9 feverish:-1.2 nauseous:-1.7
@ a
stupid:-2.4 dumb:-2.3 foolish:-1.9 idiotic:-2.5 moronic:-2.5 ignorant:-1.9
senseless:-1.8 mindless:-1.6 brainless:-2.1 inept:-1.8 incompetent:-2.0
clueless:-1.6 dense:-1.0 obtuse:-1.3 absurd:-1.5 ridiculous:-1.6
ludicrous:-1.7 preposterous:-1.6 irrational:-1.5 illogical:-1.2
misguided:-1.4 reckless:-1.8 careless:-1.5 negligent:-1.8 sloppy:-1.5
lazy:-1.6 idle:-0.9 incapable:-1.5 unqualified:-1.4 amateurish:-1.3
witless:-1.8 vacuous:-1.3 inane:-1.4 asinine:-1.9 imbecilic:-2.2
harebrained:-1.5 scatterbrained:-1.2 shortsighted:-1.3 gullible:-1.2
@ a disgust
ugly:-2.2 unsightly:-1.8 unattractive:-1.6 homely:-0.9 disfigured:-1.9
misshapen:-1.3 shabby:-1.4 dingy:-1.3 drab:-1.1 tacky:-1.3 garish:-1.1
frumpy:-1.0 dowdy:-0.9 grungy:-1.3 ragged:-1.1 unkempt:-1.1 slovenly:-1.3
@ a sadness
boring:-1.3 dull:-1.3 tedious:-1.4 monotonous:-1.2 bland:-0.9 insipid:-1.1
uninspiring:-1.2 uninteresting:-1.2 lifeless:-1.5 stale:-1.0 humdrum:-0.9
wearisome:-1.3 mind-numbing:-1.4 soporific:-0.8 vapid:-1.2 colorless:-0.8
@ a anger,disgust
arrogant:-1.8 conceited:-1.7 smug:-1.5 pompous:-1.6 haughty:-1.5
pretentious:-1.5 egotistical:-1.7 narcissistic:-1.9 selfish:-1.9 greedy:-2.1
stingy:-1.5 miserly:-1.4 covetous:-1.4 avaricious:-1.7 gluttonous:-1.4
overbearing:-1.5 domineering:-1.6 imperious:-1.4 condescending:-1.7
patronizing:-1.5 snobbish:-1.5 elitist:-1.2 entitled:-1.1 boastful:-1.4
@ a anger
rude:-1.9 impolite:-1.5 disrespectful:-1.9 insolent:-1.7 impudent:-1.5
discourteous:-1.5 obnoxious:-2.0 offensive:-1.9+u crude:-1.3 vulgar:-1.7
crass:-1.4 boorish:-1.5 uncouth:-1.4 tactless:-1.4 abrasive:-1.4
insulting:-2.1 derogatory:-1.9 demeaning:-2.0 abusive:-2.5 profane:-1.6
@ a fear,sadness
messy:-1.1 disorganized:-1.2 cluttered:-1.0 chaotic:-1.7 unruly:-1.3
disorderly:-1.3 haphazard:-1.1 erratic:-1.2 unstable:-1.5 volatile:-1.4
turbulent:-1.5 tumultuous:-1.5 anarchic:-1.6 lawless:-1.9 ungovernable:-1.4
@ a sadness
cheap:-0.8 flimsy:-1.2 rickety:-1.2 ramshackle:-1.3 dilapidated:-1.5
decrepit:-1.5 obsolete:-1.1 outdated:-1.0 antiquated:-0.9 archaic:-0.8
dated:-0.6 derelict:-1.4 crumbly:-0.9 threadbare:-1.0 worn-out:-1.2
@ a sadness,fear
unlucky:-1.4 unfortunate:-1.6 cursed:-2.0 doomed:-2.3 hapless:-1.3
luckless:-1.3 jinxed:-1.4 ill-fated:-1.8 star-crossed:-1.3
@ a disgust,anger
perverse:-1.7 twisted:-1.6 depraved:-2.3 degenerate:-1.9 debauched:-1.7
lewd:-1.6 obscene:-1.9 indecent:-1.6 blasphemous:-1.6 sacrilegious:-1.5
deviant:-1.4 warped:-1.4 degrading:-1.9 dehumanizing:-2.2 exploitive:-1.9
@ a fear,anger
suspicious:-1.2 dubious:-1.1 questionable:-1.1 fishy:-1.2 suspect:-1.0
unverified:-0.8 unsubstantiated:-1.0 baseless:-1.3 unfounded:-1.2
spurious:-1.4 bogus:-1.7 fake:-1.7 phony:-1.7 sham:-1.7 fabricated:-1.3
deceptive:-1.9 misleading:-1.8 specious:-1.3 disingenuous:-1.6
@ a sadness
pessimistic:-1.3 cynical:-1.3 fatalistic:-1.1 defeatist:-1.4 nihilistic:-1.2
jaded:-1.1 disillusioned:-1.5 despairing:-2.1 resigned:-0.8 bereft:-1.7
@ a anger,fear
oppressive:-2.0 draconian:-1.8 authoritarian:-1.7 totalitarian:-2.0
dictatorial:-1.8 tyrannical:-2.3 repressive:-1.9 coercive:-1.6
punitive:-1.3 heavy-handed:-1.4 militaristic:-1.2 brutish:-1.9
@ a fear,disgust
gruesome:-2.5 grisly:-2.3 macabre:-1.9 morbid:-1.7 ghoulish:-1.8
bloodthirsty:-2.6 murderous:-2.9 homicidal:-2.8 barbaric:-2.5 barbarous:-2.4
inhumane:-2.4 bestial:-2.0 fiendish:-2.2 demonic:-2.3 devilish:-1.8
satanic:-2.2 hellish:-2.3 infernal:-1.9 accursed:-2.0 damnable:-1.9
heinous:-2.7 egregious:-2.1 flagrant:-1.7 grievous:-2.1 unforgivable:-2.3
inexcusable:-2.1 intolerable:-2.0 insufferable:-1.9 unbearable:-2.1
excruciating:-2.5 agonizing:-2.4 harrowing:-2.2 traumatic:-2.3
distressing:-2.0 troubling:-1.7 disturbing:-1.9 worrisome:-1.5
nightmarish:-2.4
@ a anger,sadness
vindictive:-1.9 vengeful:-1.9 spiteful:-1.9 malicious:-2.3 malevolent:-2.2
malignant:-2.1 venomous:-1.9 hateful:-2.5 hurtful:-2.1 scathing:-1.7
caustic:-1.4 acerbic:-1.2 acrimonious:-1.6 inflammatory:-1.5 incendiary:-1.4
divisive:-1.4 polarizing:-1.1 petty:-1.3 pitiless:-2.0 remorseless:-2.0
unrepentant:-1.5 unapologetic:-1.0 coldhearted:-2.1 stony:-1.0 uncaring:-1.7
unkind:-1.8 unsympathetic:-1.5 unfeeling:-1.6
@ a sadness,fear
pathetic:-1.8 pitiful:-1.7 pitiable:-1.5 tragic:-2.4 direful:-1.9
woebegone:-1.7 wretched:-2.2 abject:-1.7 destitute:-2.0 impoverished:-1.9
penniless:-1.7 needy:-1.2 starving:-2.0 famished:-1.4 emaciated:-1.8
gaunt:-1.2 haggard:-1.3 downtrodden:-1.8 beleaguered:-1.4 besieged:-1.3
embattled:-1.2 troubled:-1.6 distressed:-1.9 shell-shocked:-1.9
war-torn:-2.1 poverty-stricken:-2.1 grief-stricken:-2.3 panic-stricken:-2.2
terror-stricken:-2.4
@ v anger,fear
attack:-2.0+er assault:-2.5 destroy:-2.5 kill:-3.2+er murder:-3.4+er
harm:-2.5+fl injure:-2.1 wound:-2.1 abuse:-2.8+er
torture:-3.1+er terrorize:-3.0 threaten:-2.1 bully:-2.4 assail:-1.9
batter:-2.1 strangle:-2.8 slaughter:-3.0 massacre:-3.1 maim:-2.7
mutilate:-2.9 brutalize:-2.8 victimize:-2.3 oppress:-2.3 persecute:-2.5
torment:-2.5 harass:-2.4 intimidate:-2.1 menace:-2.0 endanger:-2.0
jeopardize:-1.8 sabotage:-2.1 vandalize:-2.1 raid:-1.5 invade:-1.8
ambush:-1.9 bomb:-2.7 stab:-2.5 assassinate:-2.9 execute:-1.9 detonate:-1.8
ravage:-2.3 devastate:-2.6 demolish:-1.9 obliterate:-2.3 annihilate:-2.6
raze:-1.8 wreck:-1.8 shatter:-1.6 smash:-1.3 crush:-1.6 deface:-1.7
desecrate:-2.2 defile:-2.1 contaminate:-1.9 pollute:-2.0 taint:-1.6
@ v anger,fear
whip:-1.6 flog:-2.0 lash:-1.5 lynch:-3.0 choke:-1.9 smother:-1.7
suffocate:-2.2 drown:-2.3 trample:-1.7 gouge:-1.8 maul:-2.2 claw:-1.3
gnaw:-0.9 pound:-1.0 pummel:-1.7 thrash:-1.6 wallop:-1.3 clobber:-1.4
bludgeon:-2.3 impale:-2.2 skewer:-1.3 eviscerate:-2.2 decapitate:-2.8
electrocute:-2.4 incinerate:-1.9 immolate:-2.2
@ v sadness
fail:-2.3 collapse:-1.9 crumble:-1.5 deteriorate:-1.8 decline:-1.2
worsen:-1.8 falter:-1.3 flounder:-1.3 stumble:-1.1 regress:-1.2 wither:-1.5
decay:-1.7 rot:-1.9 erode:-1.2 degrade:-1.7 diminish:-1.1 dwindle:-1.2
stagnate:-1.3 languish:-1.5 crash:-1.9 plummet:-1.6 plunge:-1.3
tumble:-1.0 slump:-1.3 suffer:-2.1 struggle:-1.5 grieve:-2.1
mourn:-2.0 lament:-1.6 despair:-2.4 agonize:-2.2 sob:-1.7 cry:-1.6
whimper:-1.3 wallow:-1.1 brood:-1.1 sulk:-1.2 pine:-1.2 ache:-1.6
spoil:-1.7
@ v fear,sadness
abandon:-1.9 desert:-1.5 forsake:-1.7 neglect:-1.9 orphan:-1.4 strand:-1.2
die:-2.9 perish:-2.4 starve:-2.2 wilt:-1.1 fade:-0.8 vanish:-0.9
@ v sadness,fear
afflict:-1.9 infect:-1.8 debilitate:-1.8 incapacitate:-1.7 hospitalize:-1.4
bankrupt:-2.1 impoverish:-1.9 devalue:-0.9 depreciate:-0.8 demote:-1.0
evict:-1.6 displace:-1.1 uproot:-1.1 dispossess:-1.5 disinherit:-1.3
marginalize:-1.5 disenfranchise:-1.7 stigmatize:-1.8 scapegoat:-1.6
demonize:-1.8 dehumanize:-2.2
@ v anger,disgust
hate:-2.7+er despise:-2.6 loathe:-2.6 detest:-2.5 resent:-1.9 envy:-1.5
scorn:-2.0 disdain:-1.9 revile:-2.2 abhor:-2.5 condemn:-2.0 denounce:-1.9
criticize:-1.5 blame:-1.7 accuse:-1.6 insult:-2.2 mock:-1.8 ridicule:-2.0
taunt:-1.8 demean:-2.0 belittle:-1.9 humiliate:-2.4 shame:-1.9+fl
disgrace:-2.2 slander:-2.3 defame:-2.2 vilify:-2.2 disparage:-1.9
scold:-1.5 chide:-1.3 reprimand:-1.4 rebuke:-1.5 berate:-1.7 chastise:-1.6
castigate:-1.7 admonish:-1.2 censure:-1.5 reproach:-1.4 jeer:-1.7 sneer:-1.6
@ v anger,trust
tamper:-1.5 meddle:-1.1 trespass:-1.4 infringe:-1.3 violate:-2.0
lie:-1.8 cheat:-2.3+er deceive:-2.2+er betray:-2.6+er swindle:-2.4+er
defraud:-2.5 trick:-1.4 scam:-2.4+er dupe:-1.8 hoodwink:-1.8
manipulate:-1.7 exploit:-2.0 extort:-2.4 embezzle:-2.4 bribe:-2.1
rob:-2.4+er loot:-2.1+er plunder:-2.2 pilfer:-1.7 smuggle:-1.7+er
falsify:-2.0 fabricate:-1.5 distort:-1.5 misrepresent:-1.8 plagiarize:-2.1
shoplift:-1.9 connive:-1.6 collude:-1.5 conspire:-1.4
@ v fear
fear:-2.2+fl dread:-2.1 panic:-2.0 worry:-1.6 fret:-1.2 cower:-1.5
tremble:-1.2 shudder:-1.3 flinch:-1.0 recoil:-1.2 frighten:-2.0 scare:-1.9
terrify:-2.8 horrify:-2.6 alarm:-1.4 startle:-1.0 spook:-1.3 unsettle:-1.3
unnerve:-1.4 petrify:-2.2 traumatize:-2.6 paralyze:-1.9 haunt:-1.6
imperil:-1.9 destabilize:-1.5 quail:-1.2 blanch:-0.8
@ v anger,sadness
complain:-1.2 whine:-1.4 grumble:-1.1 gripe:-1.2 moan:-1.2 groan:-1.2
bemoan:-1.4 bewail:-1.5 nag:-1.4 pester:-1.5 badger:-1.4 annoy:-1.7
irritate:-1.8 irk:-1.4 exasperate:-1.6 aggravate:-1.7 antagonize:-1.7
rile:-1.4 infuriate:-2.3 enrage:-2.4 incense:-1.9 embitter:-1.7 offend:-1.9
affront:-1.7 alienate:-1.5 estrange:-1.4 vex:-1.5 displease:-1.6 disgust:-2.4
repulse:-2.0 revolt:-1.9 sicken:-2.1 nauseate:-2.0 appall:-2.1 dismay:-1.7
disappoint:-1.9 dissatisfy:-1.5 disillusion:-1.5 dishearten:-1.8
discourage:-1.8 demoralize:-1.9 deject:-1.6 sadden:-2.0 depress:-2.0
@ v anger,fear
ban:-1.4 prohibit:-1.1 outlaw:-1.3 restrict:-1.0 suppress:-1.6
censor:-1.5 muzzle:-1.3 stifle:-1.4 inhibit:-1.0 hinder:-1.2 impede:-1.2
obstruct:-1.4 thwart:-1.3 derail:-1.4 disrupt:-1.4 undermine:-1.6
subvert:-1.4 cripple:-2.0 weaken:-1.4 confiscate:-1.3 seize:-1.0
revoke:-1.2 rescind:-0.9 nullify:-0.8 invalidate:-1.0 penalize:-1.4
punish:-1.8 blacklist:-1.7 deport:-1.5
banish:-1.7 exile:-1.6 ostracize:-1.8 shun:-1.6 snub:-1.4 spurn:-1.5
@ n sadness,fear
vulnerability:-1.2+s weakness:-1.5+s liability:-1.2+s pitfall:-1.3+s
pain:-2.3+fl misery:-2.7 grief:-2.4 sorrow:-2.2 agony:-2.7 anguish:-2.5
tragedy:-2.6 disaster:-2.6+s catastrophe:-2.8+s danger:-2.2
threat:-2.0+s peril:-2.1+s hazard:-1.8+s damage:-1.9 ruin:-2.1
destruction:-2.5 death:-2.9+s disease:-2.1+s plague:-2.4+s poison:-2.4+s
toxin:-2.0+s epidemic:-2.1+s infection:-1.9+s injury:-1.8 trauma:-2.2+s
nightmare:-2.5+s terror:-2.9 horror:-2.7+s anxiety:-1.9 stress:-1.7
distress:-2.0 hardship:-1.9+s adversity:-1.5 suffering:-2.4 affliction:-2.0+s
woe:-2.0+s plight:-1.7 downfall:-1.9 demise:-2.0 doom:-2.5 panic:-2.0?
dread:-2.1? abyss:-1.6 calamity:-2.4 cataclysm:-2.3 scourge:-2.1+s
pandemic:-2.2+s contagion:-1.9 relapse:-1.5+s
@ n anger,disgust
crime:-2.4+s violence:-2.8 war:-2.9+s conflict:-1.8+s chaos:-2.1
corruption:-2.5 fraud:-2.5 scandal:-2.1+s humiliation:-2.3
betrayal:-2.6+s treachery:-2.4 hatred:-2.9 rage:-2.4 fury:-2.3 hostility:-2.1
malice:-2.3 spite:-1.9 venom:-1.9 cruelty:-2.6 brutality:-2.7 atrocity:-2.9
outrage:-2.0+s injustice:-2.2+s oppression:-2.4 tyranny:-2.6 abuse:-2.8?
assault:-2.5? murder:-3.4? massacre:-3.1? terrorism:-3.1 vandalism:-2.0
theft:-2.1+s robbery:-2.2 bribery:-2.2 extortion:-2.3 blackmail:-2.3
racism:-2.8 bigotry:-2.5 discrimination:-2.2 prejudice:-1.9 greed:-2.1
villainy:-2.2 pest:-1.5+s parasite:-1.7+s vermin:-1.8 scum:-2.2 filth:-2.0
grime:-1.3 sludge:-1.1 blight:-1.7 eyesore:-1.5+s stench:-1.7 reek:-1.5
insult:-2.2? disgrace:-2.2? slur:-2.0+s smear:-1.7+s libel:-2.1
@ n anger,fear
weapon:-0.9+s bloodshed:-2.6 carnage:-2.8 mayhem:-2.2 slaying:-2.7+s
execution:-1.9+s genocide:-3.3 homicide:-2.9+s manslaughter:-2.7
felony:-2.0 misdemeanor:-1.2+s warfare:-2.4 bombardment:-1.9
artillery:-0.9 gunfire:-1.8 crossfire:-1.5 firefight:-1.7+s
insurgency:-1.7 rebellion:-1.3+s riot:-1.9+s mob:-1.4+s gang:-1.2+s
cartel:-1.5+s hostage:-1.9+s ransom:-1.7+s kidnapping:-2.5+s
abduction:-2.3+s
@ n sadness
poverty:-2.2 famine:-2.5 drought:-1.8+s recession:-2.0+s unemployment:-1.9
debt:-1.7+s bankruptcy:-2.2 loss:-1.6 defeat:-2.0+s failure:-2.3+s
setback:-1.5+s shortage:-1.4+s deficit:-1.3+s deficiency:-1.4 drawback:-1.2+s
flaw:-1.4+s defect:-1.6+s problem:-1.7+s trouble:-1.8+s obstacle:-1.2+s
barrier:-1.0+s dilemma:-1.2+s predicament:-1.4+s mess:-1.5
wreckage:-1.8 breakdown:-1.6+s malfunction:-1.5+s glitch:-1.1 error:-1.3+s
mistake:-1.4+s blunder:-1.6+s fiasco:-1.9+s debacle:-1.9+s shambles:-1.6
turmoil:-1.8 upheaval:-1.5+s unrest:-1.6 strife:-1.8 discord:-1.5
friction:-1.1 grievance:-1.5+s regret:-1.7+s remorse:-1.5
@ x
bad:-2.5 worse:-2.1 worst:-3.1 evil:-3.4 wicked:-2.4 vicious:-2.4
cruel:-2.5 savage:-2.1 ruthless:-2.1 merciless:-2.4 heartless:-2.2
callous:-1.9 cold:-0.9 harsh:-1.7 severe:-1.4 brutal:-2.4 violent:-2.7
damn:-1.7 damned:-1.9 hell:-2.4 ugh:-1.8 yuck:-1.9 eww:-1.8 boo:-1.4
wrong:-1.7 wrongful:-2.0 wrongdoing:-2.2 meh:-0.6 blah:-0.8
guilty:-1.9 guilt:-1.9 ashamed:-1.9 sorry:-0.6 regretful:-1.7 remorseful:-1.5
alone:-1.0 apathetic:-1.2 jealous:-1.8 jealousy:-2.0 paranoid:-1.9
paranoia:-1.9 hysteria:-1.9 hysterical:-1.3 frantic:-1.3 desperate:-1.6
desperation:-1.9 futility:-1.6 vain:-1.3 lost:-1.3 losing:-1.5 loser:-2.0
losers:-2.0 victim:-1.6 victims:-1.6 enemy:-2.1 enemies:-2.1 foe:-1.7
foes:-1.7 villain:-2.4 villains:-2.4 monster:-2.0 monsters:-2.0
monstrous:-2.2 beast:-1.4 beastly:-1.7 freak:-1.5 freaks:-1.5 crazy:-1.4
insane:-1.7 insanity:-1.8 lunatic:-1.9 lunacy:-1.8 madman:-2.0 madmen:-2.0
nonsense:-1.4 rubbish:-1.6 trash:-1.7 garbage:-1.8 junk:-1.4 crap:-2.0
badly:-2.1 lose:-1.7 loses:-1.7 steal:-2.2 steals:-2.2 stole:-2.2
stolen:-2.3 stealing:-2.2 shoot:-2.3 shoots:-2.2 shot:-2.2 shooting:-2.4
sink:-1.2 sinks:-1.1 sank:-1.2 sunk:-1.3 sinking:-1.4 weep:-1.8 weeps:-1.7
wept:-1.8 weeping:-1.8 break:-1.0 breaks:-0.9 broke:-1.1 broken:-1.9
breaking:-1.0 mislead:-1.9 misleads:-1.9 misled:-2.0 hurt:-2.2 hurts:-2.1
hurting:-2.2 upset:-1.6 upsets:-1.5 upsetting:-1.9 crisis:-2.2 crises:-2.2
liar:-2.3 liars:-2.3 thief:-2.2 thieves:-2.2 wtf:-2.1 smh:-1.2 pfft:-1.0
grr:-1.4 argh:-1.5 fml:-2.2 noob:-1.2 pwned:-1.0 bleh:-0.9 darn:-1.2
dammit:-1.9 jerk:-1.9 jerks:-1.9 idiot:-2.3 idiots:-2.3 moron:-2.3
morons:-2.3 fool:-1.9 fools:-1.9 dunce:-1.8 scoundrel:-2.1 scoundrels:-2.1
crook:-1.9 crooks:-1.9 bastard:-2.4 bastards:-2.4 forbid:-1.3 forbids:-1.3
forbade:-1.3 forbidden:-1.5 forbidding:-1.5 shrink:-0.8 shrinks:-0.8
shrank:-0.9 shrunk:-0.9 shrinking:-0.9 dead:-2.9 corpse:-2.2 corpses:-2.2
funeral:-1.5 funerals:-1.5 grave:-1.4 graves:-1.4 coffin:-1.5 coffins:-1.5
tomb:-1.0 tombs:-1.0 slain:-2.5 slay:-2.5 slays:-2.4 slew:-2.3 bloody:-1.9
bloodier:-1.9 bloodiest:-2.0 gore:-1.9 gory:-1.9 hellhole:-2.5 warzone:-2.2
battlefield:-1.2 bullet:-1.0 bullets:-1.1 gun:-0.9 guns:-1.0 knife:-0.8
knives:-0.9 :(:-1.9 :-(:-2.1 :'(:-2.2 </3:-2.4 =(:-1.9 :/:-1.2 :-/:-1.3
-_-:-1.1 d::-1.4 o.o:-0.4

# ------------------------------------------------------------ supplemental
@ a joy,trust
victorious:2.4 triumphant:2.6 unbeaten:1.6 undefeated:1.6 unstoppable:1.8
invincible:1.9 dominant:1.0 mighty:1.7 powerful:1.6 potent:1.2
influential:1.4 decisive:1.2 assertive:1.0 proactive:1.2 dynamic:1.3
comfortable:1.9+u comfy:1.8 plush:1.3 luxurious:2.0 lavish:1.5 opulent:1.6
palatial:1.5 posh:1.4 ritzy:1.2 swanky:1.3 deluxe:1.6 upscale:1.2
classy:1.8 affordable:1.4+u economical:1.2 thrifty:1.1 frugal:0.8
spacious:1.2 roomy:1.0 quaint:1.1 dainty:1.1 impeccable:2.3
@ a anger,disgust
horrific:-2.7 abominable:-2.6 execrable:-2.2 lurid:-1.4 seedy:-1.4
disreputable:-1.7 infamous:-1.9 notorious:-1.6 scandalous:-2.0
ignominious:-1.8 disgraceful:-2.2 contemptible:-2.3 objectionable:-1.5
reprehensible:-2.3 blameworthy:-1.6 culpable:-1.4 complicit:-1.3
criminal:-2.2 felonious:-2.0 illicit:-1.6 illegal:-1.7 unlawful:-1.8
illegitimate:-1.4 rigged:-1.6
@ a
murky:-1.0 grueling:-1.4 arduous:-1.1 backbreaking:-1.3 thankless:-1.4
dour:-1.2 austere:-0.8 stern:-0.9 strict:-0.8 rigid:-0.9 inflexible:-1.1
stubborn:-1.2 obstinate:-1.3 headstrong:-0.9 intransigent:-1.2
unyielding:-0.9 immature:-1.2 childish:-1.1 juvenile:-0.9 infantile:-1.2
puerile:-1.2 sophomoric:-1.1 unprofessional:-1.4 unseemly:-1.2
improper:-1.2 inappropriate:-1.3 unbecoming:-1.0 undignified:-1.2
tasteless:-1.3 classless:-1.2 artless:-0.6 feckless:-1.3 careworn:-1.1
woozy:-0.7 queasy:-1.2 seasick:-1.1 heartsore:-1.6 scorching:-0.9
sweltering:-1.1 frigid:-1.0 stormy:-1.2 balmy:0.9
@ v joy,trust
hail:1.5 venerate:2.0 adulate:1.6 felicitate:1.8 recommend:1.3
advocate:1.1 promote:1.1 endear:1.7 relieve:1.5 soothe:1.7 pacify:1.2
placate:1.0 appease:0.8 mollify:0.9 conciliate:1.1 propitiate:0.8
brighten:1.6 lighten:1.1 sweeten:1.3 ennoble:1.6 dignify:1.4
embellish:1.0 beautify:1.7 adorn:1.1 garnish:0.7 decorate:0.9 ornament:0.7
@ v anger,disgust
dislike:-1.6 disapprove:-1.4 deplore:-2.0 decry:-1.7 lambaste:-1.8
pillory:-1.7 excoriate:-1.9 malign:-2.0 denigrate:-1.9 deride:-1.8
scoff:-1.4 heckle:-1.5 hiss:-1.1 growl:-1.1 snarl:-1.3 bark:-0.7
bellow:-0.8 rant:-1.1 fume:-1.5 seethe:-1.7 bristle:-1.0 glower:-1.2
glare:-1.0 scowl:-1.3 grimace:-1.1 frown:-1.2 pout:-0.9 whinge:-1.3
squabble:-1.2 bicker:-1.2 quarrel:-1.5 clash:-1.2 wrangle:-1.0 accost:-1.3
@ n anger,sadness
predator:-1.8+s prey:-1.0 casualty:-2.0 fatality:-2.4 victimhood:-1.4
bloodbath:-2.8+s onslaught:-1.8+s rampage:-2.1+s frenzy:-1.3 uproar:-1.3
furor:-1.2 backlash:-1.3 outcry:-1.3 boycott:-1.0+s lawsuit:-1.1+s
litigation:-0.9 indictment:-1.5+s penalty:-1.3 forfeit:-1.1 embargo:-0.9+s
downturn:-1.3+s depression:-2.2 stagnation:-1.3 inflation:-1.0
austerity:-1.1 layoff:-1.7+s furlough:-0.9+s foreclosure:-1.8+s
eviction:-1.7+s homelessness:-2.1 destitution:-2.0 squalor:-1.8
protest:-0.6+s
@ n joy
serendipity:1.8 jubilation:2.5 elation:2.6 exultation:2.3 rapture:2.4
radiance:1.8 splendor:2.2 grandeur:1.9 magnificence:2.5 brilliance:2.2
luster:1.2 sparkle:1.5 shimmer:1.0 glow:1.3 bouquet:1.2+s garland:0.9+s
artistry:1.6 craftsmanship:1.5 ingenuity:1.8 acumen:1.4 prowess:1.6
finesse:1.4 flair:1.3 panache:1.4 charisma:1.7 allure:1.5 magnetism:1.2
appeal:1.2

# ----------------------------------------------- anticipation/surprise only
@ e anticipation
tomorrow:0 await:0 expect:0 anticipate:0 upcoming:0 forthcoming:0 pending:0
imminent:0 preparation:0 prepare:0 plan:0 forecast:0 predict:0 prediction:0
eventual:0 eventually:0 foresee:0 foreseeable:0 outlook:0 prospect:0
horizon:0 future:0 schedule:0 scheduled:0 preview:0 premonition:0
vigil:0 countdown:0 eve:0 brink:0 threshold:0 verge:0 cusp:0 dawn:0
impending:0 looming:-0.9 anticipation:0.6 expectation:0 expectancy:0
@ e surprise
sudden:0 suddenly:0 unexpected:0 unexpectedly:0 abrupt:0 abruptly:0
surprise:0.9 surprising:0.9 startling:-0.4 unforeseen:0 unanticipated:0
twist:0 revelation:0 bombshell:-0.5 jolt:-0.6 shock:-1.9 shocking:-1.8
astonishment:0.7 amazement:1.2 wonder:1.3 marvel:1.9
stunned:-0.3 flabbergasted:0 dumbfounded:-0.4 bewildered:-0.9 bewilderment:-0.8
@ e trust
guarantee:0? certify:0? notarize:0 attest:0 testify:0 witness:0
covenant:0 contract:0 warranty:0 credential:0 credentials:0 license:0
oath:0 accreditation:0 endorsement:1.3 notarized:0 sworn:0 bonded:0
@ e anger
confrontation:-1.2 provocation:-1.3 provoke:-1.6 agitate:-1.2 agitation:-1.1
feud:-1.5 vendetta:-1.8 grudge:-1.5 rivalry:-0.6 skirmish:-1.2 brawl:-1.7
@ e fear
lurking:-1.0 stalking:-1.6 ominously:-1.5 foreboding:-1.3 trepidation:-1.2
jitters:-1.0 goosebumps:0 shiver:-0.7 shivers:-0.7 chills:-0.5
@ e sadness
farewell:-0.6 goodbye:-0.4 absence:-0.7 longing:-0.6 nostalgia:0.3
homesick:-1.3 heartache:-2.0 bereavement:-2.1 obituary:-1.2 eulogy:-0.6
@ e joy
birthday:1.5 anniversary:1.2 reunion:1.3 feast:1.5 banquet:1.1 carnival:1.4
parade:1.0 fiesta:1.4 gala:1.2 picnic:1.2 serenade:1.0 lullaby:0.8
"""

# stems whose final consonant doubles despite the short-stem heuristic
DOUBLE_FINAL = frozenset(
    "commit regret admit omit refer prefer confer occur rebel propel compel "
    "excel forget permit submit equip acquit".split()
)

_ADJ_ER_BLOCK = (
    "ing", "ed", "ous", "ful", "less", "ic", "al", "ive",
    "ant", "ent", "ate", "able", "ible", "id", "ile", "ish",
)

SUFFIX_SAFE = frozenset("abcdefghijklmnopqrstuvwxyz")


def _expandable(word: str) -> bool:
    return len(word) >= 3 and all(c in SUFFIX_SAFE for c in word)


def _doubles_final(stem: str) -> bool:
    if stem in DOUBLE_FINAL:
        return True
    return (
        3 <= len(stem) <= 5
        and stem[-1] not in "aeiouwxy"
        and stem[-2] in VOWELS
        and stem[-3] not in VOWELS
    )


def _iy(stem: str) -> str:
    """Stem with final consonant-y turned into i (happy -> happi)."""
    if len(stem) > 1 and stem.endswith("y") and stem[-2] not in VOWELS:
        return stem[:-1] + "i"
    return stem


def _plural(stem: str) -> str:
    if stem.endswith(("s", "x", "z", "ch", "sh")):
        return stem + "es"
    if len(stem) > 1 and stem.endswith("y") and stem[-2] not in VOWELS:
        return stem[:-1] + "ies"
    return stem + "s"


def _ed(stem: str) -> str:
    if stem.endswith("e"):
        return stem + "d"
    if len(stem) > 1 and stem.endswith("y") and stem[-2] not in VOWELS:
        return stem[:-1] + "ied"
    if stem.endswith("c"):
        return stem + "ked"
    if _doubles_final(stem):
        return stem + stem[-1] + "ed"
    return stem + "ed"


def _ing(stem: str) -> str:
    if stem.endswith("ie"):
        return stem[:-2] + "ying"
    if stem.endswith("e") and not stem.endswith(("ee", "oe", "ye")):
        return stem[:-1] + "ing"
    if stem.endswith("c"):
        return stem + "king"
    if _doubles_final(stem):
        return stem + stem[-1] + "ing"
    return stem + "ing"


def _er(stem: str) -> str:
    if stem.endswith("e"):
        return stem + "r"
    if len(stem) > 1 and stem.endswith("y") and stem[-2] not in VOWELS:
        return stem[:-1] + "ier"
    if _doubles_final(stem):
        return stem + stem[-1] + "er"
    return stem + "er"


def _est(stem: str) -> str:
    if stem.endswith("e"):
        return stem + "st"
    if len(stem) > 1 and stem.endswith("y") and stem[-2] not in VOWELS:
        return stem[:-1] + "iest"
    if _doubles_final(stem):
        return stem + stem[-1] + "est"
    return stem + "est"


def _ly(stem: str) -> str:
    if len(stem) > 1 and stem.endswith("y") and stem[-2] not in VOWELS:
        return stem[:-1] + "ily"
    if stem.endswith("le") and stem[-3] not in VOWELS:
        return stem[:-1] + "y"
    if stem.endswith("ic"):
        return stem + "ally"
    if stem.endswith("ll"):
        return stem + "y"
    return stem + "ly"


def _ness(stem: str) -> str:
    if len(stem) > 1 and stem.endswith("y") and stem[-2] not in VOWELS:
        return stem[:-1] + "iness"
    return stem + "ness"


def expand(word: str, valence: float, cls: str, flags: set[str]):
    """Yield (variant, valence) pairs for one seed entry, stem excluded."""
    ok = _expandable(word)
    if cls == "a" and ok and not word.endswith("ly"):
        if word.endswith(("ing", "ed")):
            yield _ly(word), valence
        else:
            yield _ly(word), valence
            yield _ness(word), valence
            if len(word) <= 6 and not word.endswith(_ADJ_ER_BLOCK):
                yield _er(word), valence
                yield _est(word), valence
    elif cls == "v" and ok:
        yield _plural(word), valence
        yield _ed(word), valence
        yield _ing(word), valence
    elif cls == "n" and ok and "s" in flags:
        yield _plural(word), valence
    if "er" in flags and ok:
        agent = _er(word)
        yield agent, valence
        yield agent + "s", valence
    if "u" in flags and ok:
        yield "un" + word, round(-0.7 * valence, 1)
    if "fl" in flags and ok:
        less = round((-0.8 if valence > 0 else -0.4) * valence, 1)
        stem = _iy(word)
        yield stem + "ful", valence
        yield stem + "fully", valence
        yield stem + "less", less
        yield stem + "lessly", less


def parse_seeds(text: str):
    """Yield (word, valence, cls, flags, emotions) per seed entry."""
    cls = "x"
    emotions: tuple[str, ...] = ()
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("@"):
            parts = line[1:].split()
            cls = parts[0]
            emotions = tuple(parts[1].split(",")) if len(parts) > 1 else ()
            for e in emotions:
                if e not in EMOTIONS:
                    raise SystemExit(f"line {lineno}: unknown emotion {e!r}")
            continue
        for entry in line.split():
            known_dup = entry.endswith("?")
            if known_dup:
                entry = entry[:-1]
            word, sep, rest = entry.rpartition(":")
            if not sep:
                raise SystemExit(f"line {lineno}: malformed entry {entry!r}")
            flags: set[str] = set()
            changed = True
            while changed:
                changed = False
                for f in ("+fl", "+er", "+u", "+s"):
                    if rest.endswith(f):
                        flags.add(f[1:])
                        rest = rest[: -len(f)]
                        changed = True
            try:
                valence = float(rest)
            except ValueError:
                raise SystemExit(f"line {lineno}: bad valence in {entry!r}")
            if word in seen and not known_dup:
                raise SystemExit(f"line {lineno}: duplicate seed {word!r}")
            seen.add(word)
            yield word, valence, cls, flags, emotions


def build(out_dir: Path) -> tuple[int, int]:
    entries = list(parse_seeds(SEEDS))
    sentiment: dict[str, float] = {}
    emotion: dict[str, set[str]] = {}
    polarity: dict[str, float] = {}

    def add(variant: str, v: float, cls: str, emotions: tuple[str, ...]):
        if variant in RULE_WORDS:
            return
        if not (cls == "e" and v == 0.0):
            sentiment.setdefault(variant, v)
        if emotions:
            emotion.setdefault(variant, set()).update(emotions)
            polarity.setdefault(variant, v)

    # seeds first so hand values beat generated variants on collision
    for word, valence, cls, flags, emotions in entries:
        add(word, valence, cls, emotions)
    for word, valence, cls, flags, emotions in entries:
        for variant, v in expand(word, valence, cls, flags):
            add(variant, v, cls, emotions)

    out_dir.mkdir(parents=True, exist_ok=True)
    sent_path = out_dir / "sentiment_lexicon.txt"
    with sent_path.open("w", encoding="utf-8") as fh:
        for word in sorted(sentiment):
            fh.write(f"{word}\t{sentiment[word]:.1f}\n")

    emo_path = out_dir / "emotion_lexicon.txt"
    with emo_path.open("w", encoding="utf-8") as fh:
        for word in sorted(emotion):
            tags = emotion[word]
            v = polarity.get(word, 0.0)
            for cat in FILE_CATEGORIES:
                if cat == "positive":
                    flag = 1 if v > 0 else 0
                elif cat == "negative":
                    flag = 1 if v < 0 else 0
                else:
                    flag = 1 if cat in tags else 0
                fh.write(f"{word}\t{cat}\t{flag}\n")

    return len(sentiment), len(emotion)


if __name__ == "__main__":
    target = Path(__file__).resolve().parent.parent / "src" / "stancelab" / "data"
    if len(sys.argv) > 1:
        target = Path(sys.argv[1])
    n_sent, n_emo = build(target)
    print(f"sentiment entries: {n_sent}")
    print(f"emotion words:     {n_emo}")
