"""Filler text for vocabulary building.

Short public-domain passages (government documents and long-expired classics,
reproduced from memory). Their only job is to populate the vocabulary with
enough word and substring variety that a mid-frequency "rare token" band
exists; they carry no other meaning for the lab.
"""

FILLER_TEXT = """
four score and seven years ago our fathers brought forth on this continent a new nation
conceived in liberty and dedicated to the proposition that all men are created equal
now we are engaged in a great civil war testing whether that nation or any nation so
conceived and so dedicated can long endure we are met on a great battlefield of that war
we have come to dedicate a portion of that field as a final resting place for those who
here gave their lives that that nation might live it is altogether fitting and proper
that we should do this but in a larger sense we can not dedicate we can not consecrate
we can not hallow this ground the brave men living and dead who struggled here have
consecrated it far above our poor power to add or detract the world will little note
nor long remember what we say here but it can never forget what they did here it is for
us the living rather to be dedicated here to the unfinished work which they who fought
here have thus far so nobly advanced it is rather for us to be here dedicated to the
great task remaining before us that from these honored dead we take increased devotion
to that cause for which they gave the last full measure of devotion that we here highly
resolve that these dead shall not have died in vain that this nation under god shall
have a new birth of freedom and that government of the people by the people for the
people shall not perish from the earth

we the people of the united states in order to form a more perfect union establish
justice insure domestic tranquility provide for the common defence promote the general
welfare and secure the blessings of liberty to ourselves and our posterity do ordain
and establish this constitution for the united states of america all legislative powers
herein granted shall be vested in a congress of the united states which shall consist
of a senate and house of representatives no person shall be a representative who shall
not have attained to the age of twenty five years and been seven years a citizen of the
united states and who shall not when elected be an inhabitant of that state in which he
shall be chosen

when in the course of human events it becomes necessary for one people to dissolve the
political bands which have connected them with another and to assume among the powers
of the earth the separate and equal station to which the laws of nature and of natures
god entitle them a decent respect to the opinions of mankind requires that they should
declare the causes which impel them to the separation we hold these truths to be self
evident that all men are created equal that they are endowed by their creator with
certain unalienable rights that among these are life liberty and the pursuit of
happiness that to secure these rights governments are instituted among men deriving
their just powers from the consent of the governed

shall i compare thee to a summers day thou art more lovely and more temperate rough
winds do shake the darling buds of may and summers lease hath all too short a date
sometime too hot the eye of heaven shines and often is his gold complexion dimmed and
every fair from fair sometime declines by chance or natures changing course untrimmed
but thy eternal summer shall not fade nor lose possession of that fair thou owest nor
shall death brag thou wanderest in his shade when in eternal lines to time thou growest
so long as men can breathe or eyes can see so long lives this and this gives life to
thee

when in disgrace with fortune and mens eyes i all alone beweep my outcast state and
trouble deaf heaven with my bootless cries and look upon myself and curse my fate
wishing me like to one more rich in hope featured like him like him with friends
possessed desiring this mans art and that mans scope with what i most enjoy contented
least yet in these thoughts myself almost despising haply i think on thee and then my
state like to the lark at break of day arising from sullen earth sings hymns at heavens
gate for thy sweet love remembered such wealth brings that then i scorn to change my
state with kings

let me not to the marriage of true minds admit impediments love is not love which
alters when it alteration finds or bends with the remover to remove o no it is an ever
fixed mark that looks on tempests and is never shaken it is the star to every wandering
bark whose worths unknown although his height be taken loves not times fool though rosy
lips and cheeks within his bending sickles compass come love alters not with his brief
hours and weeks but bears it out even to the edge of doom if this be error and upon me
proved i never writ nor no man ever loved

my mistress eyes are nothing like the sun coral is far more red than her lips red if
snow be white why then her breasts are dun if hairs be wires black wires grow on her
head i have seen roses damasked red and white but no such roses see i in her cheeks and
in some perfumes is there more delight than in the breath that from my mistress reeks i
love to hear her speak yet well i know that music hath a far more pleasing sound i
grant i never saw a goddess go my mistress when she walks treads on the ground and yet
by heaven i think my love as rare as any she belied with false compare

in the beginning god created the heaven and the earth and the earth was without form
and void and darkness was upon the face of the deep and the spirit of god moved upon
the face of the waters and god said let there be light and there was light and god saw
the light that it was good and god divided the light from the darkness and god called
the light day and the darkness he called night and the evening and the morning were the
first day and god said let there be a firmament in the midst of the waters and let it
divide the waters from the waters and god made the firmament and divided the waters
which were under the firmament from the waters which were above the firmament and it
was so and god called the firmament heaven and the evening and the morning were the
second day and god said let the waters under the heaven be gathered together unto one
place and let the dry land appear and it was so and god called the dry land earth and
the gathering together of the waters called he seas and god saw that it was good

the lord is my shepherd i shall not want he maketh me to lie down in green pastures he
leadeth me beside the still waters he restoreth my soul he leadeth me in the paths of
righteousness for his names sake yea though i walk through the valley of the shadow of
death i will fear no evil for thou art with me thy rod and thy staff they comfort me
thou preparest a table before me in the presence of mine enemies thou anointest my head
with oil my cup runneth over surely goodness and mercy shall follow me all the days of
my life and i will dwell in the house of the lord for ever

call me ishmael some years ago never mind how long precisely having little or no money
in my purse and nothing particular to interest me on shore i thought i would sail about
a little and see the watery part of the world it is a way i have of driving off the
spleen and regulating the circulation whenever i find myself growing grim about the
mouth whenever it is a damp drizzly november in my soul whenever i find myself
involuntarily pausing before coffin warehouses and bringing up the rear of every
funeral i meet and especially whenever my hypos get such an upper hand of me that it
requires a strong moral principle to prevent me from deliberately stepping into the
street and methodically knocking peoples hats off then i account it high time to get to
sea as soon as i can

it is a truth universally acknowledged that a single man in possession of a good
fortune must be in want of a wife however little known the feelings or views of such a
man may be on his first entering a neighbourhood this truth is so well fixed in the
minds of the surrounding families that he is considered the rightful property of some
one or other of their daughters my dear mr bennet said his lady to him one day have you
heard that netherfield park is let at last

it was the best of times it was the worst of times it was the age of wisdom it was the
age of foolishness it was the epoch of belief it was the epoch of incredulity it was
the season of light it was the season of darkness it was the spring of hope it was the
winter of despair we had everything before us we had nothing before us we were all
going direct to heaven we were all going direct the other way in short the period was
so far like the present period that some of its noisiest authorities insisted on its
being received for good or for evil in the superlative degree of comparison only

alice was beginning to get very tired of sitting by her sister on the bank and of
having nothing to do once or twice she had peeped into the book her sister was reading
but it had no pictures or conversations in it and what is the use of a book thought
alice without pictures or conversations so she was considering in her own mind as well
as she could for the hot day made her feel very sleepy and stupid whether the pleasure
of making a daisy chain would be worth the trouble of getting up and picking the
daisies when suddenly a white rabbit with pink eyes ran close by her

o captain my captain our fearful trip is done the ship has weathered every rack the
prize we sought is won the port is near the bells i hear the people all exulting while
follow eyes the steady keel the vessel grim and daring but o heart heart heart o the
bleeding drops of red where on the deck my captain lies fallen cold and dead

once upon a midnight dreary while i pondered weak and weary over many a quaint and
curious volume of forgotten lore while i nodded nearly napping suddenly there came a
tapping as of some one gently rapping rapping at my chamber door tis some visitor i
muttered tapping at my chamber door only this and nothing more ah distinctly i remember
it was in the bleak december and each separate dying ember wrought its ghost upon the
floor eagerly i wished the morrow vainly i had sought to borrow from my books surcease
of sorrow sorrow for the lost lenore for the rare and radiant maiden whom the angels
name lenore nameless here for evermore

a hare one day ridiculed the short feet and slow pace of the tortoise who replied
laughing though you be swift as the wind i will beat you in a race the hare believing
her assertion to be simply impossible assented to the proposal and they agreed that the
fox should choose the course and fix the goal on the day appointed for the race the two
started together the tortoise never for a moment stopping but going on with a slow but
steady pace straight to the end of the course the hare lying down by the wayside fell
fast asleep at last waking up and moving as fast as he could he saw the tortoise had
reached the goal and was comfortably dozing after her fatigue slow and steady wins the
race

the north wind and the sun disputed as to which was the most powerful and agreed that
he should be declared the victor who could first strip a wayfaring man of his clothes
the north wind first tried his power and blew with all his might but the keener his
blasts the closer the traveler wrapped his cloak around him until at last resigning all
hope of victory the wind called upon the sun to see what he could do the sun suddenly
shone out with all his warmth the traveler no sooner felt his genial rays than he took
off one garment after another and at last fairly overcome with heat undressed and
bathed in a stream that lay in his path persuasion is better than force

happy families are all alike every unhappy family is unhappy in its own way everything
was in confusion in the oblonskys house the wife had discovered that the husband was
carrying on an intrigue with a french girl who had been a governess in their family and
she had announced to her husband that she could not go on living in the same house with
him

two roads diverged in a yellow wood and sorry i could not travel both and be one
traveler long i stood and looked down one as far as i could to where it bent in the
undergrowth then took the other as just as fair and having perhaps the better claim
because it was grassy and wanted wear though as for that the passing there had worn
them really about the same and both that morning equally lay in leaves no step had
trodden black oh i kept the first for another day yet knowing how way leads on to way i
doubted if i should ever come back i shall be telling this with a sigh somewhere ages
and ages hence two roads diverged in a wood and i i took the one less traveled by and
that has made all the difference

whose woods these are i think i know his house is in the village though he will not see
me stopping here to watch his woods fill up with snow my little horse must think it
queer to stop without a farmhouse near between the woods and frozen lake the darkest
evening of the year he gives his harness bells a shake to ask if there is some mistake
the only other sound is the sweep of easy wind and downy flake the woods are lovely dark
and deep but i have promises to keep and miles to go before i sleep and miles to go
before i sleep

tyger tyger burning bright in the forests of the night what immortal hand or eye could
frame thy fearful symmetry in what distant deeps or skies burnt the fire of thine eyes
on what wings dare he aspire what the hand dare seize the fire and what shoulder and
what art could twist the sinews of thy heart and when thy heart began to beat what
dread hand and what dread feet what the hammer what the chain in what furnace was thy
brain what the anvil what dread grasp dare its deadly terrors clasp when the stars
threw down their spears and watered heaven with their tears did he smile his work to
see did he who made the lamb make thee

i wandered lonely as a cloud that floats on high oer vales and hills when all at once i
saw a crowd a host of golden daffodils beside the lake beneath the trees fluttering and
dancing in the breeze continuous as the stars that shine and twinkle on the milky way
they stretched in never ending line along the margin of a bay ten thousand saw i at a
glance tossing their heads in sprightly dance the waves beside them danced but they
outdid the sparkling waves in glee a poet could not but be gay in such a jocund company
i gazed and gazed but little thought what wealth the show to me had brought

season of mists and mellow fruitfulness close bosom friend of the maturing sun
conspiring with him how to load and bless with fruit the vines that round the thatch
eves run to bend with apples the mossed cottage trees and fill all fruit with ripeness
to the core to swell the gourd and plump the hazel shells with a sweet kernel to set
budding more and still more later flowers for the bees until they think warm days will
never cease for summer has oer brimmed their clammy cells

twas brillig and the slithy toves did gyre and gimble in the wabe all mimsy were the
borogoves and the mome raths outgrabe beware the jabberwock my son the jaws that bite
the claws that catch beware the jubjub bird and shun the frumious bandersnatch he took
his vorpal sword in hand long time the manxome foe he sought so rested he by the tumtum
tree and stood awhile in thought and as in uffish thought he stood the jabberwock with
eyes of flame came whiffling through the tulgey wood and burbled as it came one two one
two and through and through the vorpal blade went snicker snack he left it dead and
with its head he went galumphing back and hast thou slain the jabberwock come to my
arms my beamish boy o frabjous day callooh callay he chortled in his joy

to be or not to be that is the question whether tis nobler in the mind to suffer the
slings and arrows of outrageous fortune or to take arms against a sea of troubles and
by opposing end them to die to sleep no more and by a sleep to say we end the heartache
and the thousand natural shocks that flesh is heir to tis a consummation devoutly to be
wished to die to sleep to sleep perchance to dream ay theres the rub for in that sleep
of death what dreams may come when we have shuffled off this mortal coil must give us
pause theres the respect that makes calamity of so long life

tomorrow and tomorrow and tomorrow creeps in this petty pace from day to day to the
last syllable of recorded time and all our yesterdays have lighted fools the way to
dusty death out out brief candle lifes but a walking shadow a poor player that struts
and frets his hour upon the stage and then is heard no more it is a tale told by an
idiot full of sound and fury signifying nothing

friends romans countrymen lend me your ears i come to bury caesar not to praise him the
evil that men do lives after them the good is oft interred with their bones so let it
be with caesar the noble brutus hath told you caesar was ambitious if it were so it was
a grievous fault and grievously hath caesar answered it here under leave of brutus and
the rest for brutus is an honourable man so are they all all honourable men come i to
speak in caesars funeral he was my friend faithful and just to me but brutus says he
was ambitious and brutus is an honourable man

i met a traveller from an antique land who said two vast and trunkless legs of stone
stand in the desert near them on the sand half sunk a shattered visage lies whose frown
and wrinkled lip and sneer of cold command tell that its sculptor well those passions
read which yet survive stamped on these lifeless things the hand that mocked them and
the heart that fed and on the pedestal these words appear my name is ozymandias king of
kings look on my works ye mighty and despair nothing beside remains round the decay of
that colossal wreck boundless and bare the lone and level sands stretch far away

out of the night that covers me black as the pit from pole to pole i thank whatever
gods may be for my unconquerable soul in the fell clutch of circumstance i have not
winced nor cried aloud under the bludgeonings of chance my head is bloody but unbowed
beyond this place of wrath and tears looms but the horror of the shade and yet the
menace of the years finds and shall find me unafraid it matters not how strait the gate
how charged with punishments the scroll i am the master of my fate i am the captain of
my soul

in xanadu did kubla khan a stately pleasure dome decree where alph the sacred river ran
through caverns measureless to man down to a sunless sea so twice five miles of fertile
ground with walls and towers were girdled round and there were gardens bright with
sinuous rills where blossomed many an incense bearing tree and here were forests
ancient as the hills enfolding sunny spots of greenery

though i speak with the tongues of men and of angels and have not charity i am become
as sounding brass or a tinkling cymbal and though i have the gift of prophecy and
understand all mysteries and all knowledge and though i have all faith so that i could
remove mountains and have not charity i am nothing charity suffereth long and is kind
charity envieth not charity vaunteth not itself is not puffed up doth not behave itself
unseemly seeketh not her own is not easily provoked thinketh no evil rejoiceth not in
iniquity but rejoiceth in the truth beareth all things believeth all things hopeth all
things endureth all things charity never faileth

to sherlock holmes she is always the woman i have seldom heard him mention her under
any other name in his eyes she eclipses and predominates the whole of her sex it was
not that he felt any emotion akin to love for irene adler all emotions and that one
particularly were abhorrent to his cold precise but admirably balanced mind he was i
take it the most perfect reasoning and observing machine that the world has seen but as
a lover he would have placed himself in a false position he never spoke of the softer
passions save with a gibe and a sneer

squire trelawney dr livesey and the rest of these gentlemen having asked me to write
down the whole particulars about treasure island from the beginning to the end keeping
nothing back but the bearings of the island and that only because there is still
treasure not yet lifted i take up my pen in the year of grace and go back to the time
when my father kept the admiral benbow inn and the brown old seaman with the sabre cut
first took up his lodging under our roof

you will rejoice to hear that no disaster has accompanied the commencement of an
enterprise which you have regarded with such evil forebodings i arrived here yesterday
and my first task is to assure my dear sister of my welfare and increasing confidence
in the success of my undertaking i am already far north of london and as i walk in the
streets of petersburgh i feel a cold northern breeze play upon my cheeks which braces
my nerves and fills me with delight

all children except one grow up they soon know that they will grow up and the way
wendy knew was this one day when she was two years old she was playing in a garden and
she plucked another flower and ran with it to her mother i suppose she must have looked
rather delightful for mrs darling put her hand to her heart and cried oh why cant you
remain like this for ever this was all that passed between them on the subject but
henceforth wendy knew that she must grow up you always know after you are two two is
the beginning of the end

dorothy lived in the midst of the great kansas prairies with uncle henry who was a
farmer and aunt em who was the farmers wife their house was small for the lumber to
build it had to be carried by wagon many miles there were four walls a floor and a roof
which made one room and this room contained a rusty looking cookstove a cupboard for
the dishes a table three or four chairs and the beds when dorothy stood in the doorway
and looked around she could see nothing but the great gray prairie on every side

you dont know about me without you have read a book by the name of the adventures of
tom sawyer but that aint no matter that book was made by mr mark twain and he told the
truth mainly there was things which he stretched but mainly he told the truth that is
nothing i never seen anybody but lied one time or another without it was aunt polly or
the widow or maybe mary aunt polly toms aunt polly she is and mary and the widow
douglas is all told about in that book which is mostly a true book with some stretchers
as i said before

the studio was filled with the rich odour of roses and when the light summer wind
stirred amidst the trees of the garden there came through the open door the heavy scent
of the lilac or the more delicate perfume of the pink flowering thorn from the corner
of the divan of persian saddle bags on which he was lying smoking as was his custom
innumerable cigarettes lord henry wotton could just catch the gleam of the honey sweet
and honey coloured blossoms of a laburnum whose tremulous branches seemed hardly able
to bear the burden of a beauty so flamelike as theirs

when i wrote the following pages or rather the bulk of them i lived alone in the woods
a mile from any neighbor in a house which i had built myself on the shore of walden
pond in concord massachusetts and earned my living by the labor of my hands only i
lived there two years and two months at present i am a sojourner in civilized life
again i went to the woods because i wished to live deliberately to front only the
essential facts of life and see if i could not learn what it had to teach and not when
i came to die discover that i had not lived

vanity of vanities saith the preacher vanity of vanities all is vanity what profit hath
a man of all his labour which he taketh under the sun one generation passeth away and
another generation cometh but the earth abideth for ever the sun also ariseth and the
sun goeth down and hasteth to his place where he arose the wind goeth toward the south
and turneth about unto the north it whirleth about continually and the wind returneth
again according to his circuits all the rivers run into the sea yet the sea is not full
to every thing there is a season and a time to every purpose under the heaven a time to
be born and a time to die a time to plant and a time to pluck up that which is planted

i celebrate myself and sing myself and what i assume you shall assume for every atom
belonging to me as good belongs to you i loafe and invite my soul i lean and loafe at
my ease observing a spear of summer grass my tongue every atom of my blood formed from
this soil this air born here of parents born here from parents the same and their
parents the same i now thirty seven years old in perfect health begin hoping to cease
not till death

because i could not stop for death he kindly stopped for me the carriage held but just
ourselves and immortality we slowly drove he knew no haste and i had put away my labor
and my leisure too for his civility we passed the school where children strove at
recess in the ring we passed the fields of gazing grain we passed the setting sun hope
is the thing with feathers that perches in the soul and sings the tune without the
words and never stops at all and sweetest in the gale is heard and sore must be the
storm that could abash the little bird that kept so many warm

a spectre is haunting europe all the powers of old europe have entered into a holy
alliance to exorcise this spectre where is the party in opposition that has not been
decried as communistic by its opponents in power where is the opposition that has not
hurled back the branding reproach of communism against the more advanced opposition
parties as well as against its reactionary adversaries

in my younger and more vulnerable years my father gave me some advice that ive been
turning over in my mind ever since whenever you feel like criticising any one he told
me just remember that all the people in this world havent had the advantages that
youve had he didnt say any more but weve always been unusually communicative in a
reserved way and i understood that he meant a great deal more than that in consequence
im inclined to reserve all judgements a habit that has opened up many curious natures
to me and also made me the victim of not a few veteran bores
"""
